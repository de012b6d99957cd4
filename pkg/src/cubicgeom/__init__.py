"""Exact constructions on nonsingular cubic surfaces.

Blow-up models over exact field towers, the 27 lines with their Schläfli
labels, tritangent planes, double-sixes, trihedral pairs and triads,
Cayley-Salmon / Cremona hexahedral / determinantal equation forms, the
cubo-cubic Cremona transformation, quadric webs with their desmic
Steinerian quartics, Pascal hexagrams, the automorphism group of order
51840, and Cremona's five real species.
"""

__version__ = "0.1.0"
