// Recorded from the engine's HTTP API; keep in sync by re-running
// `crossgen analyze --profile profile-1 --format json` and GET /api/schema.
export const PROFILE_1 = {
    "id": "profile-1",
    "name": "Sound hypersensitive",
    "weights": {
        "1": 2,
        "2": 2,
        "3": 2,
        "4": 2,
        "5": 5,
        "6": 5,
        "7": 3
    },
    "constraint": {
        "op": "atLeastOne",
        "atoms": [
            [
                6,
                [
                    1
                ]
            ],
            [
                7,
                [
                    1
                ]
            ],
            [
                8,
                [
                    1
                ]
            ]
        ]
    },
    "description": "Unable to filter out loud noises; training requires at least one sudden sound distractor in every scenario.",
    "version": 1
};
