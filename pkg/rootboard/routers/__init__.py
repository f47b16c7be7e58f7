from rootboard.routers import roots

__all__ = ["roots"]
