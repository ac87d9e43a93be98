try:
    from ._okbody import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _okbody import *  # noqa: F401,F403  (build-tree layout)
