"""HTTP prediction service"""
