"""Seshadri constants of the anticanonical divisor on del Pezzo surfaces."""
