import pytest

from hgc.utils import (ConfigError, DecayCertificateError, DivisionError,
                       GridError, GroupLawError, HgcError, ResourceGuardError)


def test_exit_codes():
    assert HgcError.exit_code == 1
    assert ConfigError.exit_code == 2
    assert DecayCertificateError.exit_code == 3
    assert ResourceGuardError.exit_code == 4
    for error in (GroupLawError, GridError, DivisionError):
        assert error.exit_code == 1


@pytest.mark.parametrize(
    'error', [GroupLawError, GridError, DivisionError, ConfigError])
def test_value_errors(error):
    with pytest.raises(ValueError):
        raise error('invalid input')
    assert issubclass(error, HgcError)


def test_resource_errors():
    assert issubclass(ResourceGuardError, MemoryError)
    assert issubclass(DecayCertificateError, ArithmeticError)
