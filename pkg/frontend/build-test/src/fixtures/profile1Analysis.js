// Recorded from the engine's HTTP API; keep in sync by re-running
// `crossgen analyze --profile profile-1 --format json` and GET /api/schema.
export const PROFILE_1_ANALYSIS = {
    "profile_id": "profile-1",
    "profile_version": 1,
    "space_fingerprint": "03128927ce0aaad412564a40096ae2e62f3a8383ce70d21ee3b21e9a677527ef",
    "total_all": 331776,
    "total_profile": 290304,
    "percentage": 87.5,
    "delta": "5/43",
    "k_max": 9,
    "buckets": [
        {
            "k": 0,
            "cd": "0",
            "count_all": 7,
            "count_profile": 0
        },
        {
            "k": 1,
            "cd": "1/9",
            "count_all": 1260,
            "count_profile": 21
        },
        {
            "k": 2,
            "cd": "2/9",
            "count_all": 14602,
            "count_profile": 3738
        },
        {
            "k": 3,
            "cd": "1/3",
            "count_all": 55885,
            "count_profile": 36316
        },
        {
            "k": 4,
            "cd": "4/9",
            "count_all": 101537,
            "count_profile": 92538
        },
        {
            "k": 5,
            "cd": "5/9",
            "count_all": 97360,
            "count_profile": 96568
        },
        {
            "k": 6,
            "cd": "2/3",
            "count_all": 48944,
            "count_profile": 48942
        },
        {
            "k": 7,
            "cd": "7/9",
            "count_all": 11381,
            "count_profile": 11381
        },
        {
            "k": 8,
            "cd": "8/9",
            "count_all": 798,
            "count_profile": 798
        },
        {
            "k": 9,
            "cd": "1",
            "count_all": 2,
            "count_profile": 2
        }
    ],
    "curves": [
        {
            "feature_id": 1,
            "feature_name": "Type of crossing",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.7808835499665135
                },
                {
                    "cd": "2/9",
                    "v": 0.9770511881421851
                },
                {
                    "cd": "1/3",
                    "v": 0.9949936413485572
                },
                {
                    "cd": "4/9",
                    "v": 0.9995807535653897
                },
                {
                    "cd": "5/9",
                    "v": 0.9997496270202005
                },
                {
                    "cd": "2/3",
                    "v": 0.9976666522868901
                },
                {
                    "cd": "7/9",
                    "v": 0.9921413697230461
                },
                {
                    "cd": "8/9",
                    "v": 0.97379646146685
                },
                {
                    "cd": "1",
                    "v": 0.5408520829727552
                }
            ]
        },
        {
            "feature_id": 2,
            "feature_name": "Night time",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.6887218755408672
                },
                {
                    "cd": "2/9",
                    "v": 0.9231895880251755
                },
                {
                    "cd": "1/3",
                    "v": 0.9830629134700006
                },
                {
                    "cd": "4/9",
                    "v": 0.9985090478062337
                },
                {
                    "cd": "5/9",
                    "v": 0.9991843940788053
                },
                {
                    "cd": "2/3",
                    "v": 0.9919329818470957
                },
                {
                    "cd": "7/9",
                    "v": 0.9720404431233403
                },
                {
                    "cd": "8/9",
                    "v": 0.9042051046592626
                },
                {
                    "cd": "1",
                    "v": 0.6887218755408672
                }
            ]
        },
        {
            "feature_id": 3,
            "feature_name": "Rain",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.6887218755408672
                },
                {
                    "cd": "2/9",
                    "v": 0.9231895880251755
                },
                {
                    "cd": "1/3",
                    "v": 0.9830629134700006
                },
                {
                    "cd": "4/9",
                    "v": 0.9985090478062337
                },
                {
                    "cd": "5/9",
                    "v": 0.9991843940788053
                },
                {
                    "cd": "2/3",
                    "v": 0.9919329818470957
                },
                {
                    "cd": "7/9",
                    "v": 0.9720404431233403
                },
                {
                    "cd": "8/9",
                    "v": 0.9042051046592626
                },
                {
                    "cd": "1",
                    "v": 0.6887218755408672
                }
            ]
        },
        {
            "feature_id": 4,
            "feature_name": "Presence of pedestrians",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.7190280775311951
                },
                {
                    "cd": "2/9",
                    "v": 0.9489496301386514
                },
                {
                    "cd": "1/3",
                    "v": 0.988978687780698
                },
                {
                    "cd": "4/9",
                    "v": 0.9990145120067817
                },
                {
                    "cd": "5/9",
                    "v": 0.9994622058530935
                },
                {
                    "cd": "2/3",
                    "v": 0.9947002268268352
                },
                {
                    "cd": "7/9",
                    "v": 0.9815055053535384
                },
                {
                    "cd": "8/9",
                    "v": 0.9354389669665357
                },
                {
                    "cd": "1",
                    "v": 0.5408520829727552
                }
            ]
        },
        {
            "feature_id": 5,
            "feature_name": "Presence of vehicles",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.7190280775311951
                },
                {
                    "cd": "2/9",
                    "v": 0.9489496301386514
                },
                {
                    "cd": "1/3",
                    "v": 0.988978687780698
                },
                {
                    "cd": "4/9",
                    "v": 0.9990145120067817
                },
                {
                    "cd": "5/9",
                    "v": 0.9994622058530935
                },
                {
                    "cd": "2/3",
                    "v": 0.9947002268268352
                },
                {
                    "cd": "7/9",
                    "v": 0.9815055053535384
                },
                {
                    "cd": "8/9",
                    "v": 0.9354389669665357
                },
                {
                    "cd": "1",
                    "v": 0.5408520829727552
                }
            ]
        },
        {
            "feature_id": 6,
            "feature_name": "ssd: church bell",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.9792791603760918
                },
                {
                    "cd": "2/9",
                    "v": 0.9797578854167222
                },
                {
                    "cd": "1/3",
                    "v": 0.9870838105272812
                },
                {
                    "cd": "4/9",
                    "v": 0.9988238940824593
                },
                {
                    "cd": "5/9",
                    "v": 0.9909851512435697
                },
                {
                    "cd": "2/3",
                    "v": 0.9355072516841012
                },
                {
                    "cd": "7/9",
                    "v": 0.8207164933618613
                },
                {
                    "cd": "8/9",
                    "v": 0.6993747373920045
                },
                {
                    "cd": "1",
                    "v": 0.6887218755408672
                }
            ]
        },
        {
            "feature_id": 7,
            "feature_name": "ssd: helicopter",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.9792791603760918
                },
                {
                    "cd": "2/9",
                    "v": 0.9797578854167222
                },
                {
                    "cd": "1/3",
                    "v": 0.9870838105272812
                },
                {
                    "cd": "4/9",
                    "v": 0.9988238940824593
                },
                {
                    "cd": "5/9",
                    "v": 0.9909851512435697
                },
                {
                    "cd": "2/3",
                    "v": 0.9355072516841012
                },
                {
                    "cd": "7/9",
                    "v": 0.8207164933618613
                },
                {
                    "cd": "8/9",
                    "v": 0.6993747373920045
                },
                {
                    "cd": "1",
                    "v": 0.6887218755408672
                }
            ]
        },
        {
            "feature_id": 8,
            "feature_name": "ssd: car waiting red lights",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.9792791603760918
                },
                {
                    "cd": "2/9",
                    "v": 0.9797578854167222
                },
                {
                    "cd": "1/3",
                    "v": 0.9870838105272812
                },
                {
                    "cd": "4/9",
                    "v": 0.9988238940824593
                },
                {
                    "cd": "5/9",
                    "v": 0.9909851512435697
                },
                {
                    "cd": "2/3",
                    "v": 0.9355072516841012
                },
                {
                    "cd": "7/9",
                    "v": 0.8207164933618613
                },
                {
                    "cd": "8/9",
                    "v": 0.6993747373920045
                },
                {
                    "cd": "1",
                    "v": 0.6887218755408672
                }
            ]
        },
        {
            "feature_id": 9,
            "feature_name": "bn: ambulance",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.4512050593046014
                },
                {
                    "cd": "2/9",
                    "v": 0.7558624692792343
                },
                {
                    "cd": "1/3",
                    "v": 0.9322372308851786
                },
                {
                    "cd": "4/9",
                    "v": 0.9937163948816914
                },
                {
                    "cd": "5/9",
                    "v": 0.9964541366170845
                },
                {
                    "cd": "2/3",
                    "v": 0.9694996493754326
                },
                {
                    "cd": "7/9",
                    "v": 0.9001985367115065
                },
                {
                    "cd": "8/9",
                    "v": 0.7255750331471374
                },
                {
                    "cd": "1",
                    "v": 0.4512050593046014
                }
            ]
        },
        {
            "feature_id": 10,
            "feature_name": "bn: baby crying",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.4512050593046014
                },
                {
                    "cd": "2/9",
                    "v": 0.7558624692792343
                },
                {
                    "cd": "1/3",
                    "v": 0.9322372308851786
                },
                {
                    "cd": "4/9",
                    "v": 0.9937163948816914
                },
                {
                    "cd": "5/9",
                    "v": 0.9964541366170845
                },
                {
                    "cd": "2/3",
                    "v": 0.9694996493754326
                },
                {
                    "cd": "7/9",
                    "v": 0.9001985367115065
                },
                {
                    "cd": "8/9",
                    "v": 0.7255750331471374
                },
                {
                    "cd": "1",
                    "v": 0.4512050593046014
                }
            ]
        },
        {
            "feature_id": 11,
            "feature_name": "bn: dogs barking",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.4512050593046014
                },
                {
                    "cd": "2/9",
                    "v": 0.7558624692792343
                },
                {
                    "cd": "1/3",
                    "v": 0.9322372308851786
                },
                {
                    "cd": "4/9",
                    "v": 0.9937163948816914
                },
                {
                    "cd": "5/9",
                    "v": 0.9964541366170845
                },
                {
                    "cd": "2/3",
                    "v": 0.9694996493754326
                },
                {
                    "cd": "7/9",
                    "v": 0.9001985367115065
                },
                {
                    "cd": "8/9",
                    "v": 0.7255750331471374
                },
                {
                    "cd": "1",
                    "v": 0.4512050593046014
                }
            ]
        },
        {
            "feature_id": 12,
            "feature_name": "Traffic light",
            "points": [
                {
                    "cd": "1/9",
                    "v": 0.6532565038066334
                },
                {
                    "cd": "2/9",
                    "v": 0.9468934286097708
                },
                {
                    "cd": "1/3",
                    "v": 0.988558667977802
                },
                {
                    "cd": "4/9",
                    "v": 0.9989674252052655
                },
                {
                    "cd": "5/9",
                    "v": 0.9994409064459562
                },
                {
                    "cd": "2/3",
                    "v": 0.9944880169725685
                },
                {
                    "cd": "7/9",
                    "v": 0.9807081205092693
                },
                {
                    "cd": "8/9",
                    "v": 0.932196000728861
                },
                {
                    "cd": "1",
                    "v": 0.5408520829727552
                }
            ]
        }
    ],
    "excluded_features": [],
    "thresholds": {
        "low_cd_collapse": "1/9",
        "high_cd_collapse": "1"
    }
};
