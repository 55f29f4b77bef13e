# cuphcover/core/config.py
import os
from dynaconf import Dynaconf

PACKAGE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
BASE_DIR = os.getcwd()

settings = Dynaconf(
    root_path=BASE_DIR,
    settings_files=[os.path.join(PACKAGE_DIR, "settings.toml"), "settings.toml"],
    envvar_prefix="CUPHCOVER",
    environments=True,
    env_switcher="ENV_FOR_DYNACONF",
    load_dotenv=True,
    merge_enabled=True,
    env="development",
)
