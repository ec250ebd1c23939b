# This file is intentionally left empty.
# It marks the 'graphs' directory as a Python package. 