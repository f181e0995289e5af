"""Parameter, record and run-configuration schemas."""
