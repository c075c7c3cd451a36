def test_import():
    import braidrep  # noqa: F401
