from .config import CliConfig
from .field_file import FieldFile
from .main import main
