"""Tests package for Rootboard"""
