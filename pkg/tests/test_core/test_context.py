import pytest

from hgc.core import ContextManager
from hgc.core.rewriters import REWRITERS


def test_contextmanager():
    with pytest.raises(TypeError):
        ContextManager(['test'])

    @REWRITERS.register_module()
    class ReplaceGroup:

        def __call__(self, context):
            return dict(group='heisenberg:1')

    context_manager = ContextManager([ReplaceGroup()])
    assert context_manager(lambda **context: context)(
        group='euclidean:1') == dict(group='heisenberg:1')

    dict_init_context_manager = ContextManager([dict(type='ReplaceGroup')])
    assert dict_init_context_manager(lambda **context: context)(
        group='euclidean:1') == dict(group='heisenberg:1')


def test_pipeline_order():
    manager = ContextManager([
        dict(type='ResolveGroup'),
        dict(type='BuildGrid'),
        dict(type='SeedRandom'),
    ])
    context = manager.rewrite(
        dict(group='euclidean:2', grid=dict(extent=1.0, size=8), seed=3))
    assert context['group'].dim == 2
    assert context['grid'].shape == (8, 8)
    assert context['seed'] == 3
    assert 'rng' in context
