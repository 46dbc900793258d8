// Generated from data/recipes.json -- do not edit by hand.
namespace bisphere::detail_recipes {
const char* embedded_recipes_json() {
    return R"json({
 "format": "bisphere force-coefficient recipes",
 "source": "Davis (1964), Q. J. Mech. Appl. Math. 17, 499; equal spheres (kappa = 1), energy-route reduction to the T/U series basis",
 "version": 1,
 "checksum": "3efeaa4cbd10400e",
 "coefficients": [
  {
   "id": 1,
   "note": "field^2, cos^2: half-gradient of the pair longitudinal polarizability",
   "expr": [
    "neg",
    [
     "div",
     [
      "add",
      [
       "mul",
       12.0,
       [
        "pow",
        [
         "sinh",
         "eta1"
        ],
        2
       ],
       [
        "cosh",
        "eta1"
       ],
       [
        "sub",
        [
         "add",
         [
          "sub",
          [
           "S",
           "T2k3"
          ],
          [
           "S",
           "T2k1"
          ]
         ],
         [
          "div",
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U3k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ],
           [
            "mul",
            -8.0,
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ],
           [
            "mul",
            12.0,
            [
             "add",
             [
              "mul",
              0.5,
              [
               "add",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U1k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ],
             [
              "mul",
              0.25,
              [
               "sub",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U2k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          6.0
         ]
        ],
        [
         "div",
         [
          "pow",
          [
           "add",
           [
            "sub",
            [
             "S",
             "T1k3"
            ],
            [
             "S",
             "T1k1"
            ]
           ],
           [
            "add",
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ],
            [
             "mul",
             0.25,
             [
              "sub",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U2k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          2
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ]
       ]
      ],
      [
       "mul",
       4.0,
       [
        "pow",
        [
         "sinh",
         "eta1"
        ],
        3
       ],
       [
        "sub",
        [
         "neg",
         [
          "add",
          [
           "S",
           "T3k1"
          ],
          [
           "mul",
           2.0,
           [
            "S",
            "T3k2"
           ]
          ],
          [
           "S",
           "T3k3"
          ]
         ]
        ],
        [
         "div",
         [
          "sub",
          [
           "mul",
           2.0,
           [
            "add",
            [
             "sub",
             [
              "S",
              "T1k3"
             ],
             [
              "S",
              "T1k1"
             ]
            ],
            [
             "add",
             [
              "mul",
              0.5,
              [
               "add",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U1k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ],
             [
              "mul",
              0.25,
              [
               "sub",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U2k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ]
            ]
           ],
           [
            "neg",
            [
             "add",
             [
              "S",
              "T2k1"
             ],
             [
              "mul",
              2.0,
              [
               "S",
               "T2k2"
              ]
             ],
             [
              "S",
              "T2k3"
             ]
            ]
           ],
           [
            "add",
            [
             "sub",
             [
              "S",
              "T0k3"
             ],
             [
              "S",
              "T0k1"
             ]
            ],
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          [
           "mul",
           [
            "pow",
            [
             "add",
             [
              "sub",
              [
               "S",
               "T1k3"
              ],
              [
               "S",
               "T1k1"
              ]
             ],
             [
              "add",
              [
               "mul",
               0.5,
               [
                "add",
                [
                 "mul",
                 [
                  "expm1",
                  [
                   "mul",
                   4.0,
                   "eta1"
                  ]
                 ],
                 [
                  "S",
                  "U1k2"
                 ]
                ],
                [
                 "div",
                 1.0,
                 [
                  "expm1",
                  [
                   "mul",
                   2.0,
                   "eta1"
                  ]
                 ]
                ]
               ]
              ],
              [
               "mul",
               0.25,
               [
                "sub",
                [
                 "mul",
                 [
                  "expm1",
                  [
                   "mul",
                   4.0,
                   "eta1"
                  ]
                 ],
                 [
                  "S",
                  "U2k2"
                 ]
                ],
                [
                 "div",
                 1.0,
                 [
                  "expm1",
                  [
                   "mul",
                   2.0,
                   "eta1"
                  ]
                 ]
                ]
               ]
              ]
             ]
            ],
            2
           ],
           [
            "neg",
            [
             "add",
             [
              "S",
              "T1k1"
             ],
             [
              "mul",
              2.0,
              [
               "S",
               "T1k2"
              ]
             ],
             [
              "S",
              "T1k3"
             ]
            ]
           ]
          ]
         ],
         [
          "pow",
          [
           "add",
           [
            "sub",
            [
             "S",
             "T0k3"
            ],
            [
             "S",
             "T0k1"
            ]
           ],
           [
            "mul",
            0.5,
            [
             "add",
             [
              "mul",
              [
               "expm1",
               [
                "mul",
                4.0,
                "eta1"
               ]
              ],
              [
               "S",
               "U1k2"
              ]
             ],
             [
              "div",
              1.0,
              [
               "expm1",
               [
                "mul",
                2.0,
                "eta1"
               ]
              ]
             ]
            ]
           ]
          ],
          2
         ]
        ]
       ]
      ]
     ],
     [
      "mul",
      4.0,
      [
       "sinh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 2,
   "note": "field^2, sin^2: half-gradient of the pair transverse polarizability",
   "expr": [
    "neg",
    [
     "div",
     [
      "add",
      [
       "mul",
       6.0,
       [
        "pow",
        [
         "sinh",
         "eta1"
        ],
        2
       ],
       [
        "cosh",
        "eta1"
       ],
       [
        "sub",
        [
         "sub",
         [
          "sub",
          [
           "S",
           "T2k3"
          ],
          [
           "S",
           "T2k1"
          ]
         ],
         [
          "div",
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U3k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ],
           [
            "mul",
            -8.0,
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ],
           [
            "mul",
            12.0,
            [
             "add",
             [
              "mul",
              0.5,
              [
               "add",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U1k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ],
             [
              "mul",
              0.25,
              [
               "sub",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U2k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          6.0
         ]
        ],
        [
         "sub",
         [
          "sub",
          [
           "S",
           "T0k3"
          ],
          [
           "S",
           "T0k1"
          ]
         ],
         [
          "mul",
          0.5,
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U1k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ]
        ]
       ]
      ],
      [
       "mul",
       2.0,
       [
        "pow",
        [
         "sinh",
         "eta1"
        ],
        3
       ],
       [
        "sub",
        [
         "neg",
         [
          "add",
          [
           "S",
           "T3k1"
          ],
          [
           "mul",
           -2.0,
           [
            "S",
            "T3k2"
           ]
          ],
          [
           "S",
           "T3k3"
          ]
         ]
        ],
        [
         "neg",
         [
          "add",
          [
           "S",
           "T1k1"
          ],
          [
           "mul",
           -2.0,
           [
            "S",
            "T1k2"
           ]
          ],
          [
           "S",
           "T1k3"
          ]
         ]
        ]
       ]
      ]
     ],
     [
      "mul",
      4.0,
      [
       "sinh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 3,
   "note": "field-charge cross term, q1 (Z); equals -F4 for equal spheres",
   "expr": [
    "neg",
    [
     "div",
     [
      "add",
      [
       "mul",
       [
        "cosh",
        "eta1"
       ],
       [
        "div",
        [
         "add",
         [
          "sub",
          [
           "S",
           "T1k3"
          ],
          [
           "S",
           "T1k1"
          ]
         ],
         [
          "add",
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ],
          [
           "mul",
           0.25,
           [
            "sub",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U2k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "add",
         [
          "sub",
          [
           "S",
           "T0k3"
          ],
          [
           "S",
           "T0k1"
          ]
         ],
         [
          "mul",
          0.5,
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U1k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ]
        ]
       ]
      ],
      [
       "mul",
       [
        "sinh",
        "eta1"
       ],
       [
        "div",
        [
         "sub",
         [
          "mul",
          [
           "neg",
           [
            "add",
            [
             "S",
             "T2k1"
            ],
            [
             "mul",
             2.0,
             [
              "S",
              "T2k2"
             ]
            ],
            [
             "S",
             "T2k3"
            ]
           ]
          ],
          [
           "add",
           [
            "sub",
            [
             "S",
             "T0k3"
            ],
            [
             "S",
             "T0k1"
            ]
           ],
           [
            "mul",
            0.5,
            [
             "add",
             [
              "mul",
              [
               "expm1",
               [
                "mul",
                4.0,
                "eta1"
               ]
              ],
              [
               "S",
               "U1k2"
              ]
             ],
             [
              "div",
              1.0,
              [
               "expm1",
               [
                "mul",
                2.0,
                "eta1"
               ]
              ]
             ]
            ]
           ]
          ]
         ],
         [
          "mul",
          [
           "add",
           [
            "sub",
            [
             "S",
             "T1k3"
            ],
            [
             "S",
             "T1k1"
            ]
           ],
           [
            "add",
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ],
            [
             "mul",
             0.25,
             [
              "sub",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U2k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          [
           "neg",
           [
            "add",
            [
             "S",
             "T1k1"
            ],
            [
             "mul",
             2.0,
             [
              "S",
              "T1k2"
             ]
            ],
            [
             "S",
             "T1k3"
            ]
           ]
          ]
         ]
        ],
        [
         "pow",
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ],
         2
        ]
       ]
      ],
      [
       "neg",
       [
        "sinh",
        "eta1"
       ]
      ]
     ],
     [
      "mul",
      2.0,
      [
       "sinh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 4,
   "note": "field-charge cross term, q2 (Z): gradient of the induced floating potential",
   "expr": [
    "div",
    [
     "add",
     [
      "mul",
      [
       "cosh",
       "eta1"
      ],
      [
       "div",
       [
        "add",
        [
         "sub",
         [
          "S",
          "T1k3"
         ],
         [
          "S",
          "T1k1"
         ]
        ],
        [
         "add",
         [
          "mul",
          0.5,
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U1k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ],
         [
          "mul",
          0.25,
          [
           "sub",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U2k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ]
        ]
       ],
       [
        "add",
        [
         "sub",
         [
          "S",
          "T0k3"
         ],
         [
          "S",
          "T0k1"
         ]
        ],
        [
         "mul",
         0.5,
         [
          "add",
          [
           "mul",
           [
            "expm1",
            [
             "mul",
             4.0,
             "eta1"
            ]
           ],
           [
            "S",
            "U1k2"
           ]
          ],
          [
           "div",
           1.0,
           [
            "expm1",
            [
             "mul",
             2.0,
             "eta1"
            ]
           ]
          ]
         ]
        ]
       ]
      ]
     ],
     [
      "mul",
      [
       "sinh",
       "eta1"
      ],
      [
       "div",
       [
        "sub",
        [
         "mul",
         [
          "neg",
          [
           "add",
           [
            "S",
            "T2k1"
           ],
           [
            "mul",
            2.0,
            [
             "S",
             "T2k2"
            ]
           ],
           [
            "S",
            "T2k3"
           ]
          ]
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "mul",
         [
          "add",
          [
           "sub",
           [
            "S",
            "T1k3"
           ],
           [
            "S",
            "T1k1"
           ]
          ],
          [
           "add",
           [
            "mul",
            0.5,
            [
             "add",
             [
              "mul",
              [
               "expm1",
               [
                "mul",
                4.0,
                "eta1"
               ]
              ],
              [
               "S",
               "U1k2"
              ]
             ],
             [
              "div",
              1.0,
              [
               "expm1",
               [
                "mul",
                2.0,
                "eta1"
               ]
              ]
             ]
            ]
           ],
           [
            "mul",
            0.25,
            [
             "sub",
             [
              "mul",
              [
               "expm1",
               [
                "mul",
                4.0,
                "eta1"
               ]
              ],
              [
               "S",
               "U2k2"
              ]
             ],
             [
              "div",
              1.0,
              [
               "expm1",
               [
                "mul",
                2.0,
                "eta1"
               ]
              ]
             ]
            ]
           ]
          ]
         ],
         [
          "neg",
          [
           "add",
           [
            "S",
            "T1k1"
           ],
           [
            "mul",
            2.0,
            [
             "S",
             "T1k2"
            ]
           ],
           [
            "S",
            "T1k3"
           ]
          ]
         ]
        ]
       ],
       [
        "pow",
        [
         "add",
         [
          "sub",
          [
           "S",
           "T0k3"
          ],
          [
           "S",
           "T0k1"
          ]
         ],
         [
          "mul",
          0.5,
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U1k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ]
        ],
        2
       ]
      ]
     ],
     [
      "neg",
      [
       "sinh",
       "eta1"
      ]
     ]
    ],
    [
     "mul",
     2.0,
     [
      "sinh",
      "eta1"
     ]
    ]
   ]
  },
  {
   "id": 5,
   "note": "charge^2 term, q1^2: capacitance-matrix gradient, symmetric/antisymmetric split",
   "expr": [
    "neg",
    [
     "div",
     [
      "add",
      [
       "div",
       [
        "add",
        [
         "mul",
         2.0,
         [
          "cosh",
          "eta1"
         ],
         [
          "sub",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "neg",
          [
           "add",
           [
            "S",
            "T1k1"
           ],
           [
            "mul",
            -2.0,
            [
             "S",
             "T1k2"
            ]
           ],
           [
            "S",
            "T1k3"
           ]
          ]
         ]
        ]
       ],
       [
        "pow",
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "sub",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        2
       ]
      ],
      [
       "div",
       [
        "add",
        [
         "mul",
         2.0,
         [
          "cosh",
          "eta1"
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "neg",
          [
           "add",
           [
            "S",
            "T1k1"
           ],
           [
            "mul",
            2.0,
            [
             "S",
             "T1k2"
            ]
           ],
           [
            "S",
            "T1k3"
           ]
          ]
         ]
        ]
       ],
       [
        "pow",
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        2
       ]
      ]
     ],
     [
      "mul",
      8.0,
      [
       "sinh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 6,
   "note": "charge cross term, q1 q2",
   "expr": [
    "neg",
    [
     "div",
     [
      "sub",
      [
       "div",
       [
        "add",
        [
         "mul",
         2.0,
         [
          "cosh",
          "eta1"
         ],
         [
          "sub",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "neg",
          [
           "add",
           [
            "S",
            "T1k1"
           ],
           [
            "mul",
            -2.0,
            [
             "S",
             "T1k2"
            ]
           ],
           [
            "S",
            "T1k3"
           ]
          ]
         ]
        ]
       ],
       [
        "pow",
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "sub",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        2
       ]
      ],
      [
       "div",
       [
        "add",
        [
         "mul",
         2.0,
         [
          "cosh",
          "eta1"
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "neg",
          [
           "add",
           [
            "S",
            "T1k1"
           ],
           [
            "mul",
            2.0,
            [
             "S",
             "T1k2"
            ]
           ],
           [
            "S",
            "T1k3"
           ]
          ]
         ]
        ]
       ],
       [
        "pow",
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        2
       ]
      ]
     ],
     [
      "mul",
      4.0,
      [
       "sinh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 7,
   "note": "charge^2 term, q2^2; equals F5 for equal spheres",
   "expr": [
    "neg",
    [
     "div",
     [
      "add",
      [
       "div",
       [
        "add",
        [
         "mul",
         2.0,
         [
          "cosh",
          "eta1"
         ],
         [
          "sub",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "neg",
          [
           "add",
           [
            "S",
            "T1k1"
           ],
           [
            "mul",
            -2.0,
            [
             "S",
             "T1k2"
            ]
           ],
           [
            "S",
            "T1k3"
           ]
          ]
         ]
        ]
       ],
       [
        "pow",
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "sub",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        2
       ]
      ],
      [
       "div",
       [
        "add",
        [
         "mul",
         2.0,
         [
          "cosh",
          "eta1"
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "neg",
          [
           "add",
           [
            "S",
            "T1k1"
           ],
           [
            "mul",
            2.0,
            [
             "S",
             "T1k2"
            ]
           ],
           [
            "S",
            "T1k3"
           ]
          ]
         ]
        ]
       ],
       [
        "pow",
        [
         "mul",
         2.0,
         [
          "sinh",
          "eta1"
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        2
       ]
      ]
     ],
     [
      "mul",
      8.0,
      [
       "sinh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 8,
   "note": "field^2 transverse: alignment couple (aL - aT)/(2h)",
   "expr": [
    "neg",
    [
     "div",
     [
      "sub",
      [
       "mul",
       4.0,
       [
        "pow",
        [
         "sinh",
         "eta1"
        ],
        3
       ],
       [
        "sub",
        [
         "add",
         [
          "sub",
          [
           "S",
           "T2k3"
          ],
          [
           "S",
           "T2k1"
          ]
         ],
         [
          "div",
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U3k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ],
           [
            "mul",
            -8.0,
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ],
           [
            "mul",
            12.0,
            [
             "add",
             [
              "mul",
              0.5,
              [
               "add",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U1k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ],
             [
              "mul",
              0.25,
              [
               "sub",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U2k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          6.0
         ]
        ],
        [
         "div",
         [
          "pow",
          [
           "add",
           [
            "sub",
            [
             "S",
             "T1k3"
            ],
            [
             "S",
             "T1k1"
            ]
           ],
           [
            "add",
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ],
            [
             "mul",
             0.25,
             [
              "sub",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U2k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          2
         ],
         [
          "add",
          [
           "sub",
           [
            "S",
            "T0k3"
           ],
           [
            "S",
            "T0k1"
           ]
          ],
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ]
       ]
      ],
      [
       "mul",
       2.0,
       [
        "pow",
        [
         "sinh",
         "eta1"
        ],
        3
       ],
       [
        "sub",
        [
         "sub",
         [
          "sub",
          [
           "S",
           "T2k3"
          ],
          [
           "S",
           "T2k1"
          ]
         ],
         [
          "div",
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U3k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ],
           [
            "mul",
            -8.0,
            [
             "mul",
             0.5,
             [
              "add",
              [
               "mul",
               [
                "expm1",
                [
                 "mul",
                 4.0,
                 "eta1"
                ]
               ],
               [
                "S",
                "U1k2"
               ]
              ],
              [
               "div",
               1.0,
               [
                "expm1",
                [
                 "mul",
                 2.0,
                 "eta1"
                ]
               ]
              ]
             ]
            ]
           ],
           [
            "mul",
            12.0,
            [
             "add",
             [
              "mul",
              0.5,
              [
               "add",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U1k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ],
             [
              "mul",
              0.25,
              [
               "sub",
               [
                "mul",
                [
                 "expm1",
                 [
                  "mul",
                  4.0,
                  "eta1"
                 ]
                ],
                [
                 "S",
                 "U2k2"
                ]
               ],
               [
                "div",
                1.0,
                [
                 "expm1",
                 [
                  "mul",
                  2.0,
                  "eta1"
                 ]
                ]
               ]
              ]
             ]
            ]
           ]
          ],
          6.0
         ]
        ],
        [
         "sub",
         [
          "sub",
          [
           "S",
           "T0k3"
          ],
          [
           "S",
           "T0k1"
          ]
         ],
         [
          "mul",
          0.5,
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U1k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ]
        ]
       ]
      ]
     ],
     [
      "mul",
      4.0,
      [
       "cosh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 9,
   "note": "field-charge cross term, q1 (X); equals -F10 for equal spheres",
   "expr": [
    "neg",
    [
     "div",
     [
      "sub",
      [
       "mul",
       [
        "sinh",
        "eta1"
       ],
       [
        "div",
        [
         "add",
         [
          "sub",
          [
           "S",
           "T1k3"
          ],
          [
           "S",
           "T1k1"
          ]
         ],
         [
          "add",
          [
           "mul",
           0.5,
           [
            "add",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U1k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ],
          [
           "mul",
           0.25,
           [
            "sub",
            [
             "mul",
             [
              "expm1",
              [
               "mul",
               4.0,
               "eta1"
              ]
             ],
             [
              "S",
              "U2k2"
             ]
            ],
            [
             "div",
             1.0,
             [
              "expm1",
              [
               "mul",
               2.0,
               "eta1"
              ]
             ]
            ]
           ]
          ]
         ]
        ],
        [
         "add",
         [
          "sub",
          [
           "S",
           "T0k3"
          ],
          [
           "S",
           "T0k1"
          ]
         ],
         [
          "mul",
          0.5,
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U1k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ]
        ]
       ]
      ],
      [
       "cosh",
       "eta1"
      ]
     ],
     [
      "mul",
      2.0,
      [
       "cosh",
       "eta1"
      ]
     ]
    ]
   ]
  },
  {
   "id": 10,
   "note": "field-charge cross term, q2 (X): induced potential over h",
   "expr": [
    "div",
    [
     "sub",
     [
      "mul",
      [
       "sinh",
       "eta1"
      ],
      [
       "div",
       [
        "add",
        [
         "sub",
         [
          "S",
          "T1k3"
         ],
         [
          "S",
          "T1k1"
         ]
        ],
        [
         "add",
         [
          "mul",
          0.5,
          [
           "add",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U1k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ],
         [
          "mul",
          0.25,
          [
           "sub",
           [
            "mul",
            [
             "expm1",
             [
              "mul",
              4.0,
              "eta1"
             ]
            ],
            [
             "S",
             "U2k2"
            ]
           ],
           [
            "div",
            1.0,
            [
             "expm1",
             [
              "mul",
              2.0,
              "eta1"
             ]
            ]
           ]
          ]
         ]
        ]
       ],
       [
        "add",
        [
         "sub",
         [
          "S",
          "T0k3"
         ],
         [
          "S",
          "T0k1"
         ]
        ],
        [
         "mul",
         0.5,
         [
          "add",
          [
           "mul",
           [
            "expm1",
            [
             "mul",
             4.0,
             "eta1"
            ]
           ],
           [
            "S",
            "U1k2"
           ]
          ],
          [
           "div",
           1.0,
           [
            "expm1",
            [
             "mul",
             2.0,
             "eta1"
            ]
           ]
          ]
         ]
        ]
       ]
      ]
     ],
     [
      "cosh",
      "eta1"
     ]
    ],
    [
     "mul",
     2.0,
     [
      "cosh",
      "eta1"
     ]
    ]
   ]
  }
 ]
})json";
}
}  // namespace bisphere::detail_recipes
