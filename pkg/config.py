"""Configuration settings for the partition category workbench"""
import os
from dotenv import load_dotenv

load_dotenv()

# Database settings
DB_PATH = os.getenv('DB_PATH', 'partition_cache.db')
USE_CACHE = os.getenv('USE_CACHE', 'False').lower() == 'true'

# Closure search bounds
MAX_POINTS = int(os.getenv('MAX_POINTS', '8'))
INTERMEDIATE_POINTS = int(os.getenv('INTERMEDIATE_POINTS', '12'))
MAX_ITERATIONS = int(os.getenv('MAX_ITERATIONS', '64'))

# Pattern frames and escalation of bounded completeness checks
FRAME_BOUND = int(os.getenv('FRAME_BOUND', '6'))
ESCALATION_STEP = int(os.getenv('ESCALATION_STEP', '4'))
ESCALATION_CEILING = int(os.getenv('ESCALATION_CEILING', '16'))

# Reporting
SW_RANGE = int(os.getenv('SW_RANGE', '16'))
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()
REPORT_FORMAT = os.getenv('REPORT_FORMAT', 'plain')
