"""Workflow nodes of `verify`."""
