from fock_ida.catalog.symbols import DEFAULT_SUITE, SymbolSpec, catalog, parse_symbol

__all__ = ["DEFAULT_SUITE", "SymbolSpec", "catalog", "parse_symbol"]
