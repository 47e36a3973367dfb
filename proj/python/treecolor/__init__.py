from ._treecolor import *  # noqa: F401,F403
from ._treecolor import TreecolorError, BinaryTree, TreePair  # noqa: F401
