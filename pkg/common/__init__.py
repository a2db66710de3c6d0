"""CoinvKit shared helpers"""
