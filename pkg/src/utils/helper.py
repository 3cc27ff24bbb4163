import logging
import os


def setup_logging(level="WARNING"):
    """
    Configure the root logger once for command-line runs.
    """
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        logging.error(f"Unknown log level: {level}. Falling back to WARNING")
        numeric = logging.WARNING
    logging.basicConfig(level=numeric, format="%(asctime)s %(levelname)s %(message)s")
    logging.getLogger().setLevel(numeric)


def save_text_to_file(text, path):
    """
    Save a text report to a file.
    """
    try:
        with open(path, 'w') as fp:
            fp.write(text if text.endswith("\n") else text + "\n")
        logging.info(f"Report saved to: {path}")
    except Exception as e:
        logging.error(f"Error saving report to file: {path}. Error: {str(e)}")
        raise


def ensure_directory_exists(directory):
    """
    Ensure the specified directory exists; create if it doesn't.
    """
    try:
        if not os.path.exists(directory):
            os.makedirs(directory, exist_ok=True)
            logging.info(f"Directory created: {directory}")
    except Exception as e:
        logging.error(f"Error creating directory: {directory}. Error: {str(e)}")
