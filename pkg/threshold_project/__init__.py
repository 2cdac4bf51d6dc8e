# Project package for the threshold-codes tools
