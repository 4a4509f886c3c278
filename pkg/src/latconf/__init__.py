"""Exact arithmetic for quadratic lattices, line configurations, and
Jacobian-ring period ranks.

Subpackages:

* :mod:`latconf.matrices` — exact rational/integer dense linear algebra.
* :mod:`latconf.lattices` — quadratic lattices over Z and discriminant forms.
* :mod:`latconf.isotropic` — isotropic vector/plane classification.
* :mod:`latconf.configs` — labeled line configurations, GIT stability,
  the Cremona involution, and finite group actions.
* :mod:`latconf.f2space` — the 7-dimensional F2 quadratic space.
* :mod:`latconf.jacobian` — graded pieces of the Jacobian ring and the
  infinitesimal period map.
* :mod:`latconf.cli` — command line front end and the verification
  harness.
"""

from __future__ import annotations

__version__ = "0.1.0"
