# This file is intentionally left empty.
# It marks the 'entanglement' directory as a Python package. 