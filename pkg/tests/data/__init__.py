# This file makes the 'data' directory a package. 