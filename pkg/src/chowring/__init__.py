"""Exact intersection theory on Grassmannians and projective-bundle towers."""
