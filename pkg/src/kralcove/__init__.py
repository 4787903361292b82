"""Quantum alcove model and Kashiwara-Nakashima columns for column-shape
Kirillov-Reshetikhin crystals in classical types, with explicit maps in
both directions and a quantum Bruhat graph underneath.

The pieces, bottom up:

- :mod:`kralcove.weyl` letters, signed permutations, roots, circular orders
- :mod:`kralcove.qbg` the quantum Bruhat graph, two ways, and DOT export
- :mod:`kralcove.alcove` lambda-chains, admissible subsets, foldings
- :mod:`kralcove.columns` KN columns, splitting, extension, enumeration
- :mod:`kralcove.fill` the map from admissible subsets to fillings
- :mod:`kralcove.inverse` reorder and greedy paths: fillings back to subsets
- :mod:`kralcove.matchings` split-column matchings and the pair conditions
- :mod:`kralcove.cli` the ``kralcove`` command
"""

__version__ = "0.1.0"
