"""
API HTTP do wellfound
"""
