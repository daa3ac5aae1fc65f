// Recorded from the engine's HTTP API; keep in sync by re-running
// `crossgen analyze --profile profile-1 --format json` and GET /api/schema.
export const SCHEMA_FIXTURE = {
    "fingerprint": "03128927ce0aaad412564a40096ae2e62f3a8383ce70d21ee3b21e9a677527ef",
    "combination_count": 331776,
    "features": [
        {
            "id": 1,
            "name": "Type of crossing",
            "group": 1,
            "values": [
                "1/3",
                "2/3",
                "1"
            ],
            "labels": [
                "short",
                "long",
                "double"
            ]
        },
        {
            "id": 2,
            "name": "Night time",
            "group": 2,
            "values": [
                "0",
                "1"
            ],
            "labels": [
                "day time",
                "night time"
            ]
        },
        {
            "id": 3,
            "name": "Rain",
            "group": 2,
            "values": [
                "0",
                "1"
            ],
            "labels": [
                "sunny",
                "rainy"
            ]
        },
        {
            "id": 4,
            "name": "Presence of pedestrians",
            "group": 3,
            "values": [
                "0",
                "1/2",
                "1"
            ],
            "labels": [
                "no one",
                "some people",
                "many people"
            ]
        },
        {
            "id": 5,
            "name": "Presence of vehicles",
            "group": 4,
            "values": [
                "0",
                "1/2",
                "1"
            ],
            "labels": [
                "no cars",
                "some cars",
                "many cars"
            ]
        },
        {
            "id": 6,
            "name": "ssd: church bell",
            "group": 5,
            "values": [
                "0",
                "1"
            ],
            "labels": [
                "no sound",
                "sound activated"
            ]
        },
        {
            "id": 7,
            "name": "ssd: helicopter",
            "group": 5,
            "values": [
                "0",
                "1"
            ],
            "labels": [
                "no sound",
                "sound activated"
            ]
        },
        {
            "id": 8,
            "name": "ssd: car waiting red lights",
            "group": 5,
            "values": [
                "0",
                "1"
            ],
            "labels": [
                "no sound",
                "sound activated"
            ]
        },
        {
            "id": 9,
            "name": "bn: ambulance",
            "group": 6,
            "values": [
                "0",
                "1/3",
                "2/3",
                "1"
            ],
            "labels": [
                "mute",
                "low",
                "medium",
                "high"
            ]
        },
        {
            "id": 10,
            "name": "bn: baby crying",
            "group": 6,
            "values": [
                "0",
                "1/3",
                "2/3",
                "1"
            ],
            "labels": [
                "mute",
                "low",
                "medium",
                "high"
            ]
        },
        {
            "id": 11,
            "name": "bn: dogs barking",
            "group": 6,
            "values": [
                "0",
                "1/3",
                "2/3",
                "1"
            ],
            "labels": [
                "mute",
                "low",
                "medium",
                "high"
            ]
        },
        {
            "id": 12,
            "name": "Traffic light",
            "group": 7,
            "values": [
                "1/6",
                "1/3",
                "1/2",
                "2/3",
                "5/6",
                "1"
            ],
            "labels": [
                "no traffic light",
                "basic TL",
                "TL with pedestrian button",
                "TL with countdown timer",
                "TL with button and timer",
                "broken or malfunctioning TL"
            ]
        }
    ],
    "groups": [
        {
            "id": 1,
            "name": "Visuospatial awareness"
        },
        {
            "id": 2,
            "name": "Pattern vision"
        },
        {
            "id": 3,
            "name": "Social factor"
        },
        {
            "id": 4,
            "name": "Hazard factor"
        },
        {
            "id": 5,
            "name": "Sudden Sound perception"
        },
        {
            "id": 6,
            "name": "Tolerance to noise"
        },
        {
            "id": 7,
            "name": "Rule complexity and hazard factor"
        }
    ]
};
