"""Brick polytopes of sorting networks."""

from .arrangement import Arrangement, brick_vector, contact_graph, greedy
from .enumeration import all_arrangements, flip_graph
from .network import Network, alternating_network, bubble_sort_network, kernel, make_network
from .polytope import build_polytope

__version__ = "0.1.0"
