"""Shared pytest configuration."""


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: exhaustive runs at full acceptance size (-m 'not slow')"
    )
