"""noninertial-tangles library

Entanglement of W-class and GHZ states shared by inertial and uniformly accelerated
observers.
"""
