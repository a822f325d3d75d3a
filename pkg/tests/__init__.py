"""
Test suite for ackkit
"""
