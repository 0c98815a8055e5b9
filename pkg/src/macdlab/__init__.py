"""Exact computation with stable-limit non-symmetric Macdonald functions.

Submodules: ``qt_field`` (rational functions in q, t), ``combinatorics``,
``symfunc`` (symmetric functions, Jing operators, Hall-Littlewood and
Macdonald P), ``finite_daha`` (the polynomial representation at rank n),
``almost_sym`` (almost-symmetric functions) and ``stable_limit``.
"""

__version__ = "0.1.0"
