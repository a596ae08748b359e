"""Exact semisimplicity criteria for Brauer, BMW, and q-Brauer algebras.

The package computes, entirely in exact arithmetic, the largest n for which
these diagram algebras are semisimple over a given field, three independent
ways: closed-form bounds from weight combinatorics, brute-force searches for
vanishing weights, and ranks of Markov-trace Gram matrices.
"""

__version__ = "0.1.0"
