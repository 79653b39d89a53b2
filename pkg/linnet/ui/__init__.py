from .console.ui import ConsoleUI

default_ui = ConsoleUI
