"""
Composition and rendering shared by the CLI and the HTTP surface
"""
