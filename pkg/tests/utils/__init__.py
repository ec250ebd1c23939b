# This file is intentionally left empty.
# It marks the 'utils' directory as a Python package. 