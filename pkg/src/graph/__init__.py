"""LangGraph state and workflow behind `verify`."""
