from mmengine.registry import Registry

__all__ = ['GENERATORS']

GENERATORS = Registry(
    'generator',
    scope='matnormdiag',
    locations=['matnormdiag.simharness'],
)
