"""Low-thrust reachability toolkit.

Maximum-initial-mass shooting solvers for electric low-thrust and
solar-sail transfers, a dataset pipeline that turns them into labeled
reachability samples, and from-scratch neural surrogates.
"""
__version__ = "0.1.0"
