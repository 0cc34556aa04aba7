import os

from dotenv import dotenv_values

from tilecount.models.exceptions import EnvironmentVarNotExists

ENVIRONMENT = dotenv_values(".env")


def get_env(env_name: str, prefer_local=True, default: str | None = None) -> str:
    """
    Get an environment variable from the .env file or from the operating system.
    :param env_name: Variable name to retrieve.
    :param prefer_local: Sets which value will be returned if the variable exists in both the .env and the OS.
    :param default: Value returned when the variable is missing. Without it a missing variable is an error.
    :return: Value of the environment variable.
    :raises EnvironmentVarNotExists: If the variable does not exist in the .env or the OS and no default is given.
    """
    # Load local and global variables with name env_name.
    global_env = os.environ.get(env_name)
    local_env = ENVIRONMENT.get(env_name)

    # Check that env_name exists in .env or in OS.
    if not global_env and not local_env:
        if default is not None:
            return default
        raise EnvironmentVarNotExists(env_name)

    # Return local or global variable, whichever is valid, using the preference set by prefer_local.
    if prefer_local:
        return local_env or global_env
    else:
        return global_env or local_env


def get_int_env(env_name: str, default: int) -> int:
    """
    Integer variant of get_env for budgets and worker counts.
    :param env_name: Variable name to retrieve.
    :param default: Value used when the variable is not set.
    :return: The parsed integer.
    """
    return int(get_env(env_name, default=str(default)))


CACHE_DIR = get_env(
    "TILECOUNT_CACHE_DIR", default=os.path.join("~", ".cache", "tilecount")
)
TRIANGLE_BUDGET = get_int_env("TILECOUNT_TRIANGLE_BUDGET", 64)
ENUM_CAP = get_int_env("TILECOUNT_ENUM_CAP", 1_000_000)
WORKERS = get_int_env("TILECOUNT_WORKERS", 1)
SPOT_CHECK_RATE = float(get_env("TILECOUNT_SPOT_CHECK_RATE", default="0.1"))
LOG_LEVEL = get_env("TILECOUNT_LOG_LEVEL", default="WARNING")
