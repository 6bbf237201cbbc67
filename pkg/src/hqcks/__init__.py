"""Binary matrices from q-ary codes via Kautz-Singleton expansion, and their
higher-order quasi-cyclic structure."""

__version__ = "0.1.0"
