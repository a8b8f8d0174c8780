"""Exact combinatorics of weak-order lattice congruences and their Hopf algebras.

The library works with four layers of objects:

* permutations of [n] under the weak order (``arclat.permutations``),
* arcs, noncrossing arc diagrams and forcing-closed arc ideals
  (``arclat.arcs``),
* the bijections and surjections between permutations and diagrams, and the
  congruence-class machinery they induce (``arclat.diagram_maps``),
* decorations with concatenation/selection, conservative maps into arc
  ideals, and the F/P-basis Hopf algebra engine (``arclat.decorations``,
  ``arclat.hopf``).

Everything is exact (integer coefficients, finite sets) and every value is
immutable and hashable, so all operations are pure functions that are safe to
share between threads.
"""

__version__ = "0.1.0"
