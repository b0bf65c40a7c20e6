try:
    from ._mtlattice import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _mtlattice import *  # noqa: F401,F403  (in-tree build layout)
