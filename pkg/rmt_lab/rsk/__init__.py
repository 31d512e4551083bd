"""RSK correspondence and increasing subsequences"""
