#!/usr/bin/env python3
"""
Start the gender prediction service
"""
import subprocess
import sys
import os

# Add parent directory to path to import src modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.config import MODEL_PATH, SERVICE_HOST, SERVICE_PORT


def main():
    if not os.path.exists(MODEL_PATH):
        print(f"Model not found at {MODEL_PATH}. Train one first:")
        print(f"  python -m src train --in <profiles.jsonl> --out {MODEL_PATH}")
        sys.exit(1)
    print(f"Model found at {MODEL_PATH}")

    print("\n" + "=" * 60)
    print(f"Starting gender prediction service on http://{SERVICE_HOST}:{SERVICE_PORT}")
    print(f"Try: curl -X POST http://localhost:{SERVICE_PORT}/predict -d '{{\"name\": \"...\"}}'")
    print("=" * 60 + "\n")

    subprocess.run([
        sys.executable, "-m", "uvicorn",
        "src.api.app:create_app_from_config",
        "--factory",
        "--host", SERVICE_HOST,
        "--port", str(SERVICE_PORT),
    ])


if __name__ == "__main__":
    main()
