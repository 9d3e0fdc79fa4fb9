# Reference Package
"""Published golden values for regression comparison."""
