"""
Simple games: median and choice algebra, decompositions and exhaustive search
"""
