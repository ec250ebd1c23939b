"""Test suite for the SRG network analysis toolkit."""