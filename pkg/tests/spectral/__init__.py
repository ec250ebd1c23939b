# This file is intentionally left empty.
# It marks the 'spectral' directory as a Python package. 