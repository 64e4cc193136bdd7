"""Test suite for AgentChef package."""

# This file is intentionally left blank.
# It serves as an initializer for the `tests` package.