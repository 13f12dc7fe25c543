"""tmsverify tests."""
