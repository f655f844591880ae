import os
from dotenv import load_dotenv

def load_config():
    load_dotenv()
    return {
        "max_dim": int(os.getenv("DCA_MAX_DIM", "6")),  # guards the exponential enumerations
        "log_level": os.getenv("DCA_LOG_LEVEL", "WARNING"),
        "workers": int(os.getenv("DCA_WORKERS", "1")),  # threads for the example corpus
        "probes": int(os.getenv("DCA_PROBES", "20")),
        "seed": int(os.getenv("DCA_SEED", "0")),
    }
