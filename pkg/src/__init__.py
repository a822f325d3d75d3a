# ackkit - Exact kernel toolkit for the ACK conjecture
# Rational linear algebra, nut/core graph classification, witness search

__version__ = "0.4.0"
