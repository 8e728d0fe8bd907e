class InputError(ValueError):
    """Raised for malformed or out-of-contract user input.

    The CLI maps this to exit status 2.
    """
