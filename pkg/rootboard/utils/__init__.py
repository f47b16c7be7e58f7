"""
Rootboard - Computational engines
One module per concern: digits, takht, approx, scale, verify, newton
"""
