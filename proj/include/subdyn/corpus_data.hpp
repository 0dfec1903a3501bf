#pragma once

// Embedded copy of data/corpus.json (kept bit-identical by a test), so the
// built-in corpus works regardless of working directory.

namespace subdyn {

inline const char* corpus_json_text() {
    return R"CORPUS(
{
  "maps": [
    {
      "expected": {
        "classification": {
          "ergodic": true,
          "exact": true,
          "generic": true,
          "invertible": false,
          "mixing": true
        },
        "density": [
          "6/5",
          "6/5",
          "9/5",
          "3/5",
          "3/5"
        ],
        "matrix": [
          [
            "1/2",
            "1/2",
            "1/2",
            "0",
            "0"
          ],
          [
            "0",
            "0",
            "1/2",
            "0",
            "0"
          ],
          [
            "0",
            "0",
            "1/4",
            "1/4",
            "1/4"
          ],
          [
            "0",
            "0",
            "1/4",
            "1/4",
            "1/4"
          ],
          [
            "1",
            "1",
            "0",
            "0",
            "0"
          ]
        ],
        "period": 1,
        "q0": [
          "0",
          "1/4",
          "1/3",
          "1/2",
          "2/3",
          "1"
        ],
        "stabilized": [
          "0",
          "1/4",
          "1/3",
          "1/2",
          "2/3",
          "1"
        ]
      },
      "kind": "plfunc",
      "name": "example14_s",
      "points": [
        [
          "0",
          "0"
        ],
        [
          "1/4",
          "1/2"
        ],
        [
          "1/3",
          "1/3"
        ],
        [
          "1/2",
          "1"
        ],
        [
          "2/3",
          "1/3"
        ],
        [
          "1",
          "0"
        ]
      ],
      "source": {
        "classification": "reference",
        "density": "reference",
        "matrix": "reference",
        "period": "reference",
        "points": "derived",
        "q0": "reference",
        "stabilized": "reference"
      }
    },
    {
      "expected": {
        "classification": {
          "ergodic": true,
          "exact": false,
          "generic": true,
          "invertible": false,
          "mixing": false
        },
        "density": [
          "3/4",
          "3/4",
          "3/4",
          "3/2"
        ],
        "matrix": [
          [
            "0",
            "0",
            "0",
            "1"
          ],
          [
            "0",
            "0",
            "0",
            "1/2"
          ],
          [
            "0",
            "0",
            "0",
            "1/2"
          ],
          [
            "1/2",
            "1/2",
            "1/2",
            "0"
          ]
        ],
        "period": 2,
        "q0": [
          "0",
          "1/3",
          "1/2",
          "1"
        ],
        "stabilized": [
          "0",
          "1/3",
          "1/2",
          "2/3",
          "1"
        ]
      },
      "kind": "plfunc",
      "name": "example14_t",
      "points": [
        [
          "0",
          "1"
        ],
        [
          "1/3",
          "2/3"
        ],
        [
          "1/2",
          "1"
        ],
        [
          "2/3",
          "2/3"
        ],
        [
          "1",
          "0"
        ]
      ],
      "source": {
        "classification": "reference",
        "density": "reference",
        "matrix": "reference",
        "period": "reference",
        "points": "derived",
        "q0": "reference",
        "stabilized": "reference"
      }
    },
    {
      "expected": {
        "classification": {
          "ergodic": true,
          "exact": true,
          "generic": true,
          "invertible": false,
          "mixing": true
        },
        "density": [
          "1",
          "1"
        ],
        "matrix": [
          [
            "1/2",
            "1/2"
          ],
          [
            "1/2",
            "1/2"
          ]
        ],
        "period": 1,
        "q0": [
          "0",
          "1/2",
          "1"
        ],
        "stabilized": [
          "0",
          "1/2",
          "1"
        ]
      },
      "kind": "plfunc",
      "name": "tent",
      "points": [
        [
          "0",
          "0"
        ],
        [
          "1/2",
          "1"
        ],
        [
          "1",
          "0"
        ]
      ],
      "source": {
        "classification": "derived",
        "density": "derived",
        "matrix": "derived",
        "period": "derived",
        "points": "derived",
        "q0": "derived",
        "stabilized": "derived"
      }
    },
    {
      "expected": {
        "classification": {
          "ergodic": false,
          "exact": false,
          "generic": false,
          "invertible": true,
          "mixing": false
        },
        "period": 1,
        "q0": [
          "0",
          "1"
        ],
        "stabilized": [
          "0",
          "1"
        ]
      },
      "kind": "plfunc",
      "name": "identity",
      "points": [
        [
          "0",
          "0"
        ],
        [
          "1",
          "1"
        ]
      ],
      "source": {
        "classification": "reference",
        "period": "derived",
        "points": "derived",
        "q0": "derived",
        "stabilized": "derived"
      }
    },
    {
      "expected": {
        "classification": {
          "ergodic": false,
          "exact": false,
          "generic": false,
          "invertible": true,
          "mixing": false
        },
        "period": 1,
        "q0": [
          "0",
          "1"
        ],
        "stabilized": [
          "0",
          "1"
        ]
      },
      "kind": "plfunc",
      "name": "flip",
      "points": [
        [
          "0",
          "1"
        ],
        [
          "1",
          "0"
        ]
      ],
      "source": {
        "classification": "reference",
        "period": "derived",
        "points": "derived",
        "q0": "derived",
        "stabilized": "derived"
      }
    },
    {
      "a": 1,
      "b": 1,
      "expected": {
        "regime": "GenericNotErgodic"
      },
      "kind": "fracmap",
      "name": "frac_1_1",
      "source": {
        "regime": "reference"
      }
    },
    {
      "a": 1,
      "b": 2,
      "expected": {
        "regime": "Exact"
      },
      "kind": "fracmap",
      "name": "frac_1_2",
      "source": {
        "regime": "reference"
      }
    },
    {
      "a": 2,
      "b": 1,
      "expected": {
        "regime": "AttractsToZero"
      },
      "kind": "fracmap",
      "name": "frac_2_1",
      "source": {
        "regime": "reference"
      }
    },
    {
      "a": 1,
      "b": 3,
      "expected": {
        "regime": "Exact"
      },
      "kind": "fracmap",
      "name": "frac_1_3",
      "source": {
        "regime": "reference"
      }
    },
    {
      "a": 1,
      "b": 4,
      "expected": {
        "regime": "Exact"
      },
      "kind": "fracmap",
      "name": "frac_1_4",
      "source": {
        "regime": "reference"
      }
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 2
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 1,
      "name": "adding_machine_1",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 4
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 2,
      "name": "adding_machine_2",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 8
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 3,
      "name": "adding_machine_3",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 16
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 4,
      "name": "adding_machine_4",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)",
        "(x0 /\\ x1 /\\ x2 -> !x3) /\\ (!x3 -> x0 /\\ x1 /\\ x2)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 32
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 5,
      "name": "adding_machine_5",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)",
        "(x0 /\\ x1 /\\ x2 -> !x3) /\\ (!x3 -> x0 /\\ x1 /\\ x2)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 -> !x4) /\\ (!x4 -> x0 /\\ x1 /\\ x2 /\\ x3)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 64
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 6,
      "name": "adding_machine_6",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)",
        "(x0 /\\ x1 /\\ x2 -> !x3) /\\ (!x3 -> x0 /\\ x1 /\\ x2)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 -> !x4) /\\ (!x4 -> x0 /\\ x1 /\\ x2 /\\ x3)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 -> !x5) /\\ (!x5 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 128
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 7,
      "name": "adding_machine_7",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)",
        "(x0 /\\ x1 /\\ x2 -> !x3) /\\ (!x3 -> x0 /\\ x1 /\\ x2)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 -> !x4) /\\ (!x4 -> x0 /\\ x1 /\\ x2 /\\ x3)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 -> !x5) /\\ (!x5 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 -> !x6) /\\ (!x6 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 256
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 8,
      "name": "adding_machine_8",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)",
        "(x0 /\\ x1 /\\ x2 -> !x3) /\\ (!x3 -> x0 /\\ x1 /\\ x2)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 -> !x4) /\\ (!x4 -> x0 /\\ x1 /\\ x2 /\\ x3)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 -> !x5) /\\ (!x5 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 -> !x6) /\\ (!x6 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 -> !x7) /\\ (!x7 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 512
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 9,
      "name": "adding_machine_9",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)",
        "(x0 /\\ x1 /\\ x2 -> !x3) /\\ (!x3 -> x0 /\\ x1 /\\ x2)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 -> !x4) /\\ (!x4 -> x0 /\\ x1 /\\ x2 /\\ x3)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 -> !x5) /\\ (!x5 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 -> !x6) /\\ (!x6 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 -> !x7) /\\ (!x7 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 /\\ x7 -> !x8) /\\ (!x8 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 /\\ x7)"
      ]
    },
    {
      "expected": {
        "classification": {
          "generic": true,
          "invertible": true
        },
        "permutation_order": 1024
      },
      "generator": "adding_machine",
      "kind": "boolsubst",
      "n": 10,
      "name": "adding_machine_10",
      "source": {
        "classification": "derived",
        "permutation_order": "derived",
        "terms": "derived"
      },
      "terms": [
        "!x0",
        "(x0 -> !x1) /\\ (!x1 -> x0)",
        "(x0 /\\ x1 -> !x2) /\\ (!x2 -> x0 /\\ x1)",
        "(x0 /\\ x1 /\\ x2 -> !x3) /\\ (!x3 -> x0 /\\ x1 /\\ x2)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 -> !x4) /\\ (!x4 -> x0 /\\ x1 /\\ x2 /\\ x3)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 -> !x5) /\\ (!x5 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 -> !x6) /\\ (!x6 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 -> !x7) /\\ (!x7 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 /\\ x7 -> !x8) /\\ (!x8 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 /\\ x7)",
        "(x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 /\\ x7 /\\ x8 -> !x9) /\\ (!x9 -> x0 /\\ x1 /\\ x2 /\\ x3 /\\ x4 /\\ x5 /\\ x6 /\\ x7 /\\ x8)"
      ]
    }
  ]
}
)CORPUS";
}

}  // namespace subdyn
