"""tmsverify - exact verification of rank-two topological mirror symmetry identities"""

__version__ = "0.1.0"
