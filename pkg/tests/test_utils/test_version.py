from hgc import __version__, version_info
from hgc.version import parse_version_info


def test_version_check():
    assert parse_version_info('0.2.1rc1') > parse_version_info('0.2.1')
    assert parse_version_info('0.2.1') > parse_version_info('0.2.0rc1')
    assert parse_version_info('0.1.0rc2') == (0, 1, 0, 'rc2')
    assert version_info == parse_version_info(__version__)
