# ------------------------------------------------------------------------------------------------
# License
# ------------------------------------------------------------------------------------------------

# Copyright (c) 2025 LSeu-Open
#
# This code is licensed under the MIT License.
# See LICENSE file in the root directory

# ------------------------------------------------------------------------------------------------
# Description
# ------------------------------------------------------------------------------------------------

# This script is the main entry point for running the SRG network analysis from a checkout,
# without installing the `srgnet` console script.
#
#     python analyze_srg.py gen --family petersen --out petersen.g6
#     python analyze_srg.py entropy petersen.g6 --g 1 --partition 12:3

# ------------------------------------------------------------------------------------------------
# Imports
# ------------------------------------------------------------------------------------------------

from srgnet.cli import main

# ------------------------------------------------------------------------------------------------
# Main script
# ------------------------------------------------------------------------------------------------

if __name__ == "__main__":
    main()
