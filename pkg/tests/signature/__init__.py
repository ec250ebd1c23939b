# This file is intentionally left empty.
# It marks the 'signature' directory as a Python package. 