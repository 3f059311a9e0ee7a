"""
Dessins d'enfants of completely reducible trigonal curves.
"""
__version__ = "0.1.0"
