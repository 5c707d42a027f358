#!/usr/bin/env python3
"""
Example runner for flop-verify
Asks a running verification service for a quick check of each lemma.
"""

import sys
from pathlib import Path

import httpx

BASE_URL = "http://localhost:8000"

# small boxes that still contain every boundary case
QUICK_REQUESTS = {
    "3.1": {"k_max": 4, "m_max": 4},
    "3.2": {"k_max": 4, "m_max": 4},
    "3.3": {"degree_max": 3},
    "3.4": {"k_max": 4, "m_max": 4},
    "3.5": {"m_max": 3, "degree_max": 4},
    "3.6": {"degree_max": 4},
}


def check_system_health(client: httpx.Client) -> bool:
    """Check if the service is running and healthy."""
    print("🔍 Checking system health...")
    try:
        response = client.get("/health")
    except httpx.HTTPError as e:
        print(f"❌ Cannot connect to system: {e}")
        return False
    if response.status_code != 200:
        print(f"❌ Health check failed: {response.status_code}")
        return False
    data = response.json()
    print(f"✅ System is healthy: {data['status']} (schema {data['schema']})")
    return True


def run_example(client: httpx.Client) -> bool:
    """Run one quick check per lemma and print the verdicts."""
    all_verified = True
    for lemma_id, body in QUICK_REQUESTS.items():
        response = client.post(f"/api/lemmas/{lemma_id}", json=body)
        if response.status_code != 200:
            print(f"❌ Lemma {lemma_id}: HTTP {response.status_code} {response.json().get('detail')}")
            all_verified = False
            continue
        report = response.json()
        mark = "✅" if report["verdict"] == "verified" else "❌"
        print(f"{mark} Lemma {lemma_id}: {report['verdict']} ({report['wall_clock_seconds']:.2f}s)")
        all_verified = all_verified and report["verdict"] == "verified"
    return all_verified


def main():
    print("🎉 flop-verify Example Runner")
    print("=" * 40)

    if not Path("src/main.py").exists():
        print("❌ Please run this script from the repository root")
        return False

    with httpx.Client(base_url=BASE_URL, timeout=120.0) as client:
        if not check_system_health(client):
            print("\n📋 Start the service first:")
            print("1. Run: uvicorn src.main:app --reload   (or docker-compose up)")
            print("2. Then run: python scripts/run_example.py")
            return False
        success = run_example(client)

    if success:
        print("\n🎉 Every quick check verified")
        print("- Full sweeps: flop-verify all --format md")
        print("- API documentation: http://localhost:8000/docs")
    else:
        print("\n❌ Some checks did not verify; rerun them with flop-verify lemma --id <id>")
    return success


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
