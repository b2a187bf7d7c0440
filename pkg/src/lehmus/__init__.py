"""Machine checks for the equal internal bisectors theorem and the propositional
laws behind direct and indirect proofs."""

__version__ = "0.1.0"
