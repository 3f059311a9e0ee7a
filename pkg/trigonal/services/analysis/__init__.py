# trigonal/services/analysis/__init__.py
"""
Maximality, deformation families and the discriminant locus.
"""
