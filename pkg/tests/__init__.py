"""Tests package."""


