//! Reference tables reproduced by the acceptance suite.

#![allow(dead_code)]

use modmono::classify::{QuasiTag, SemiTag};

/// Quasi monomially irreducible N below 1000 with their family.
pub const QUASI_BELOW_1000: &[(u64, QuasiTag)] = &[
    (2, QuasiTag::Prime), (3, QuasiTag::Prime), (4, QuasiTag::PrimePower), (5, QuasiTag::Prime),
    (6, QuasiTag::TwoThree), (7, QuasiTag::Prime), (8, QuasiTag::PrimePower), (9, QuasiTag::PrimePower),
    (11, QuasiTag::Prime), (12, QuasiTag::TwoThree), (13, QuasiTag::Prime), (16, QuasiTag::PrimePower),
    (17, QuasiTag::Prime), (18, QuasiTag::TwoThree), (19, QuasiTag::Prime), (23, QuasiTag::Prime),
    (24, QuasiTag::TwoThree), (25, QuasiTag::PrimePower), (27, QuasiTag::PrimePower), (29, QuasiTag::Prime),
    (31, QuasiTag::Prime), (32, QuasiTag::PrimePower), (36, QuasiTag::TwoThree), (37, QuasiTag::Prime),
    (41, QuasiTag::Prime), (43, QuasiTag::Prime), (47, QuasiTag::Prime), (48, QuasiTag::TwoThree),
    (49, QuasiTag::PrimePower), (53, QuasiTag::Prime), (54, QuasiTag::TwoThree), (59, QuasiTag::Prime),
    (61, QuasiTag::Prime), (64, QuasiTag::PrimePower), (67, QuasiTag::Prime), (71, QuasiTag::Prime),
    (72, QuasiTag::TwoThree), (73, QuasiTag::Prime), (79, QuasiTag::Prime), (81, QuasiTag::PrimePower),
    (83, QuasiTag::Prime), (89, QuasiTag::Prime), (96, QuasiTag::TwoThree), (97, QuasiTag::Prime),
    (101, QuasiTag::Prime), (103, QuasiTag::Prime), (107, QuasiTag::Prime), (108, QuasiTag::TwoThree),
    (109, QuasiTag::Prime), (113, QuasiTag::Prime), (121, QuasiTag::PrimePower), (125, QuasiTag::PrimePower),
    (127, QuasiTag::Prime), (128, QuasiTag::PrimePower), (131, QuasiTag::Prime), (137, QuasiTag::Prime),
    (139, QuasiTag::Prime), (144, QuasiTag::TwoThree), (149, QuasiTag::Prime), (151, QuasiTag::Prime),
    (157, QuasiTag::Prime), (162, QuasiTag::TwoThree), (163, QuasiTag::Prime), (167, QuasiTag::Prime),
    (169, QuasiTag::PrimePower), (173, QuasiTag::Prime), (179, QuasiTag::Prime), (181, QuasiTag::Prime),
    (191, QuasiTag::Prime), (192, QuasiTag::TwoThree), (193, QuasiTag::Prime), (197, QuasiTag::Prime),
    (199, QuasiTag::Prime), (211, QuasiTag::Prime), (216, QuasiTag::TwoThree), (223, QuasiTag::Prime),
    (227, QuasiTag::Prime), (229, QuasiTag::Prime), (233, QuasiTag::Prime), (239, QuasiTag::Prime),
    (241, QuasiTag::Prime), (243, QuasiTag::PrimePower), (251, QuasiTag::Prime), (256, QuasiTag::PrimePower),
    (257, QuasiTag::Prime), (263, QuasiTag::Prime), (269, QuasiTag::Prime), (271, QuasiTag::Prime),
    (277, QuasiTag::Prime), (281, QuasiTag::Prime), (283, QuasiTag::Prime), (288, QuasiTag::TwoThree),
    (289, QuasiTag::PrimePower), (293, QuasiTag::Prime), (307, QuasiTag::Prime), (311, QuasiTag::Prime),
    (313, QuasiTag::Prime), (317, QuasiTag::Prime), (324, QuasiTag::TwoThree), (331, QuasiTag::Prime),
    (337, QuasiTag::Prime), (343, QuasiTag::PrimePower), (347, QuasiTag::Prime), (349, QuasiTag::Prime),
    (353, QuasiTag::Prime), (359, QuasiTag::Prime), (361, QuasiTag::PrimePower), (367, QuasiTag::Prime),
    (373, QuasiTag::Prime), (379, QuasiTag::Prime), (383, QuasiTag::Prime), (384, QuasiTag::TwoThree),
    (389, QuasiTag::Prime), (397, QuasiTag::Prime), (401, QuasiTag::Prime), (409, QuasiTag::Prime),
    (419, QuasiTag::Prime), (421, QuasiTag::Prime), (431, QuasiTag::Prime), (432, QuasiTag::TwoThree),
    (433, QuasiTag::Prime), (439, QuasiTag::Prime), (443, QuasiTag::Prime), (449, QuasiTag::Prime),
    (457, QuasiTag::Prime), (461, QuasiTag::Prime), (463, QuasiTag::Prime), (467, QuasiTag::Prime),
    (479, QuasiTag::Prime), (486, QuasiTag::TwoThree), (487, QuasiTag::Prime), (491, QuasiTag::Prime),
    (499, QuasiTag::Prime), (503, QuasiTag::Prime), (509, QuasiTag::Prime), (512, QuasiTag::PrimePower),
    (521, QuasiTag::Prime), (523, QuasiTag::Prime), (529, QuasiTag::PrimePower), (541, QuasiTag::Prime),
    (547, QuasiTag::Prime), (557, QuasiTag::Prime), (563, QuasiTag::Prime), (569, QuasiTag::Prime),
    (571, QuasiTag::Prime), (576, QuasiTag::TwoThree), (577, QuasiTag::Prime), (587, QuasiTag::Prime),
    (593, QuasiTag::Prime), (599, QuasiTag::Prime), (601, QuasiTag::Prime), (607, QuasiTag::Prime),
    (613, QuasiTag::Prime), (617, QuasiTag::Prime), (619, QuasiTag::Prime), (625, QuasiTag::PrimePower),
    (631, QuasiTag::Prime), (641, QuasiTag::Prime), (643, QuasiTag::Prime), (647, QuasiTag::Prime),
    (648, QuasiTag::TwoThree), (653, QuasiTag::Prime), (659, QuasiTag::Prime), (661, QuasiTag::Prime),
    (673, QuasiTag::Prime), (677, QuasiTag::Prime), (683, QuasiTag::Prime), (691, QuasiTag::Prime),
    (701, QuasiTag::Prime), (709, QuasiTag::Prime), (719, QuasiTag::Prime), (727, QuasiTag::Prime),
    (729, QuasiTag::PrimePower), (733, QuasiTag::Prime), (739, QuasiTag::Prime), (743, QuasiTag::Prime),
    (751, QuasiTag::Prime), (757, QuasiTag::Prime), (761, QuasiTag::Prime), (768, QuasiTag::TwoThree),
    (769, QuasiTag::Prime), (773, QuasiTag::Prime), (787, QuasiTag::Prime), (797, QuasiTag::Prime),
    (809, QuasiTag::Prime), (811, QuasiTag::Prime), (821, QuasiTag::Prime), (823, QuasiTag::Prime),
    (827, QuasiTag::Prime), (829, QuasiTag::Prime), (839, QuasiTag::Prime), (841, QuasiTag::PrimePower),
    (853, QuasiTag::Prime), (857, QuasiTag::Prime), (859, QuasiTag::Prime), (863, QuasiTag::Prime),
    (864, QuasiTag::TwoThree), (877, QuasiTag::Prime), (881, QuasiTag::Prime), (883, QuasiTag::Prime),
    (887, QuasiTag::Prime), (907, QuasiTag::Prime), (911, QuasiTag::Prime), (919, QuasiTag::Prime),
    (929, QuasiTag::Prime), (937, QuasiTag::Prime), (941, QuasiTag::Prime), (947, QuasiTag::Prime),
    (953, QuasiTag::Prime), (961, QuasiTag::PrimePower), (967, QuasiTag::Prime), (971, QuasiTag::Prime),
    (972, QuasiTag::TwoThree), (977, QuasiTag::Prime), (983, QuasiTag::Prime), (991, QuasiTag::Prime),
    (997, QuasiTag::Prime),
];

/// `(N, phi(N), omega(N))` for `N = 2^n 3^m <= 1000`, `n, m >= 1`.
pub const OMEGA_2N3M: &[(u64, u64, u64)] = &[
    (6, 2, 5), (12, 4, 11), (18, 6, 15), (24, 8, 23), (36, 12, 31), (48, 16, 41),
    (54, 18, 39), (72, 24, 63), (96, 32, 77), (108, 36, 79), (144, 48, 113), (162, 54, 111),
    (192, 64, 149), (216, 72, 159), (288, 96, 213), (324, 108, 223), (384, 128, 293), (432, 144, 281),
    (486, 162, 327), (576, 192, 413), (648, 216, 447), (768, 256, 581), (864, 288, 525), (972, 324, 655),
];

/// Residues k in [0, N-1] with a reducible minimal solution.
pub const REDUCIBLE_RESIDUES: &[(u64, &[u64])] = &[
    (
        48,
        &[
        0, 4, 12, 20, 28, 36, 44,
        ],
    ),
    (
        108,
        &[
        0, 3, 6, 12, 15, 18, 21, 24, 30, 33, 36, 39, 42, 48, 51, 57,
        60, 66, 69, 72, 75, 78, 84, 87, 90, 93, 96, 102, 105,
        ],
    ),
    (
        192,
        &[
        0, 4, 8, 12, 16, 20, 24, 28, 36, 40, 44, 48, 52, 56, 60, 68,
        72, 76, 80, 84, 88, 92, 100, 104, 108, 112, 116, 120, 124, 132, 136, 140,
        144, 148, 152, 156, 164, 168, 172, 176, 180, 184, 188,
        ],
    ),
    (
        216,
        &[
        0, 3, 6, 12, 15, 18, 21, 24, 30, 33, 36, 39, 42, 48, 51, 57,
        60, 66, 69, 72, 75, 78, 84, 87, 90, 93, 96, 102, 105, 111, 114, 120,
        123, 126, 129, 132, 138, 141, 144, 147, 150, 156, 159, 165, 168, 174, 177, 180,
        183, 186, 192, 195, 198, 201, 204, 210, 213,
        ],
    ),
    (
        384,
        &[
        0, 4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60,
        68, 72, 76, 80, 84, 88, 92, 96, 100, 104, 108, 112, 116, 120, 124, 132,
        136, 140, 144, 148, 152, 156, 160, 164, 168, 172, 176, 180, 184, 188, 196, 200,
        204, 208, 212, 216, 220, 224, 228, 232, 236, 240, 244, 248, 252, 260, 264, 268,
        272, 276, 280, 284, 288, 292, 296, 300, 304, 308, 312, 316, 324, 328, 332, 336,
        340, 344, 348, 352, 356, 360, 364, 368, 372, 376, 380,
        ],
    ),
    (
        864,
        &[
        0, 3, 4, 6, 8, 12, 15, 18, 20, 21, 24, 28, 30, 33, 36, 39,
        40, 42, 44, 48, 51, 52, 56, 57, 60, 66, 68, 69, 72, 75, 76, 78,
        84, 87, 88, 90, 92, 93, 96, 100, 102, 104, 105, 108, 111, 114, 116, 120,
        123, 124, 126, 129, 132, 136, 138, 140, 141, 144, 147, 148, 150, 152, 156, 159,
        164, 165, 168, 172, 174, 177, 180, 183, 184, 186, 188, 192, 195, 196, 198, 200,
        201, 204, 210, 212, 213, 216, 219, 220, 222, 228, 231, 232, 234, 236, 237, 240,
        244, 246, 248, 249, 252, 255, 258, 260, 264, 267, 268, 273, 276, 280, 282, 284,
        285, 288, 291, 292, 294, 296, 300, 303, 306, 308, 309, 312, 316, 318, 321, 324,
        327, 328, 330, 332, 336, 339, 340, 342, 344, 345, 348, 354, 356, 357, 360, 363,
        364, 366, 372, 375, 376, 380, 381, 384, 388, 390, 392, 393, 396, 399, 402, 404,
        408, 411, 412, 414, 417, 420, 424, 426, 428, 429, 435, 436, 438, 440, 444, 447,
        450, 452, 453, 456, 460, 462, 465, 468, 471, 472, 474, 476, 480, 483, 484, 488,
        489, 492, 498, 500, 501, 504, 507, 508, 510, 516, 519, 520, 522, 524, 525, 528,
        532, 534, 536, 537, 540, 543, 546, 548, 552, 555, 556, 558, 561, 564, 568, 570,
        572, 573, 576, 579, 580, 582, 584, 588, 591, 596, 597, 600, 604, 606, 609, 612,
        615, 616, 618, 620, 624, 627, 628, 630, 632, 633, 636, 642, 644, 645, 648, 651,
        652, 654, 660, 663, 664, 666, 668, 669, 672, 676, 678, 680, 681, 684, 687, 690,
        692, 696, 699, 700, 705, 708, 712, 714, 716, 717, 720, 723, 724, 726, 728, 732,
        735, 738, 740, 741, 744, 748, 750, 753, 756, 759, 760, 762, 764, 768, 771, 772,
        774, 776, 777, 780, 786, 788, 789, 792, 795, 796, 798, 804, 807, 808, 812, 813,
        816, 820, 822, 824, 825, 828, 831, 834, 836, 840, 843, 844, 846, 849, 852, 856,
        858, 860, 861,
        ],
    ),
];

/// Even semi monomially irreducible N up to 2500 with their family.
pub const SEMI_EVEN_TO_2500: &[(u64, SemiTag)] = &[
    (4, SemiTag::TwicePrimePower), (6, SemiTag::TwicePrimePower), (8, SemiTag::TwicePrimePower), (10, SemiTag::TwicePrimePower),
    (12, SemiTag::Covered), (14, SemiTag::TwicePrimePower), (16, SemiTag::TwicePrimePower), (18, SemiTag::TwicePrimePower),
    (20, SemiTag::Covered), (22, SemiTag::TwicePrimePower), (24, SemiTag::Covered), (26, SemiTag::TwicePrimePower),
    (28, SemiTag::Covered), (30, SemiTag::Covered), (32, SemiTag::TwicePrimePower), (34, SemiTag::TwicePrimePower),
    (36, SemiTag::Covered), (38, SemiTag::TwicePrimePower), (40, SemiTag::Covered), (46, SemiTag::TwicePrimePower),
    (48, SemiTag::Covered), (50, SemiTag::TwicePrimePower), (54, SemiTag::TwicePrimePower), (56, SemiTag::Covered),
    (58, SemiTag::TwicePrimePower), (60, SemiTag::Covered), (62, SemiTag::TwicePrimePower), (64, SemiTag::TwicePrimePower),
    (66, SemiTag::Untagged), (68, SemiTag::Covered), (72, SemiTag::Covered), (74, SemiTag::TwicePrimePower),
    (78, SemiTag::Untagged), (80, SemiTag::Covered), (82, SemiTag::TwicePrimePower), (84, SemiTag::Covered),
    (86, SemiTag::TwicePrimePower), (90, SemiTag::Covered), (94, SemiTag::TwicePrimePower), (96, SemiTag::Covered),
    (98, SemiTag::TwicePrimePower), (100, SemiTag::Covered), (106, SemiTag::TwicePrimePower), (108, SemiTag::Covered),
    (112, SemiTag::Covered), (118, SemiTag::TwicePrimePower), (120, SemiTag::Covered), (122, SemiTag::TwicePrimePower),
    (124, SemiTag::Covered), (128, SemiTag::TwicePrimePower), (132, SemiTag::Untagged), (134, SemiTag::TwicePrimePower),
    (136, SemiTag::Covered), (140, SemiTag::Covered), (142, SemiTag::TwicePrimePower), (144, SemiTag::Covered),
    (146, SemiTag::TwicePrimePower), (150, SemiTag::Covered), (156, SemiTag::Untagged), (158, SemiTag::TwicePrimePower),
    (160, SemiTag::Covered), (162, SemiTag::TwicePrimePower), (166, SemiTag::TwicePrimePower), (168, SemiTag::Covered),
    (178, SemiTag::TwicePrimePower), (180, SemiTag::Covered), (192, SemiTag::Covered), (194, SemiTag::TwicePrimePower),
    (196, SemiTag::Covered), (198, SemiTag::Untagged), (200, SemiTag::Covered), (202, SemiTag::TwicePrimePower),
    (204, SemiTag::Covered), (206, SemiTag::TwicePrimePower), (214, SemiTag::TwicePrimePower), (216, SemiTag::Covered),
    (218, SemiTag::TwicePrimePower), (222, SemiTag::Untagged), (224, SemiTag::Covered), (226, SemiTag::TwicePrimePower),
    (234, SemiTag::Untagged), (240, SemiTag::Covered), (242, SemiTag::TwicePrimePower), (248, SemiTag::Covered),
    (250, SemiTag::TwicePrimePower), (252, SemiTag::Covered), (254, SemiTag::TwicePrimePower), (256, SemiTag::TwicePrimePower),
    (262, SemiTag::TwicePrimePower), (264, SemiTag::Untagged), (270, SemiTag::Covered), (272, SemiTag::Covered),
    (274, SemiTag::TwicePrimePower), (276, SemiTag::Untagged), (278, SemiTag::TwicePrimePower), (280, SemiTag::Covered),
    (288, SemiTag::Covered), (298, SemiTag::TwicePrimePower), (300, SemiTag::Covered), (302, SemiTag::TwicePrimePower),
    (312, SemiTag::Untagged), (314, SemiTag::TwicePrimePower), (320, SemiTag::Covered), (324, SemiTag::Covered),
    (326, SemiTag::TwicePrimePower), (330, SemiTag::Untagged), (334, SemiTag::TwicePrimePower), (336, SemiTag::Covered),
    (338, SemiTag::TwicePrimePower), (340, SemiTag::Covered), (346, SemiTag::TwicePrimePower), (358, SemiTag::TwicePrimePower),
    (360, SemiTag::Covered), (362, SemiTag::TwicePrimePower), (372, SemiTag::Covered), (382, SemiTag::TwicePrimePower),
    (384, SemiTag::Covered), (386, SemiTag::TwicePrimePower), (390, SemiTag::Untagged), (392, SemiTag::Covered),
    (394, SemiTag::TwicePrimePower), (396, SemiTag::Untagged), (398, SemiTag::TwicePrimePower), (400, SemiTag::Covered),
    (408, SemiTag::Covered), (420, SemiTag::Covered), (422, SemiTag::TwicePrimePower), (432, SemiTag::Covered),
    (444, SemiTag::Untagged), (446, SemiTag::TwicePrimePower), (448, SemiTag::Covered), (450, SemiTag::Covered),
    (454, SemiTag::TwicePrimePower), (458, SemiTag::TwicePrimePower), (466, SemiTag::TwicePrimePower), (468, SemiTag::Untagged),
    (476, SemiTag::Covered), (478, SemiTag::TwicePrimePower), (480, SemiTag::Covered), (482, SemiTag::TwicePrimePower),
    (486, SemiTag::TwicePrimePower), (496, SemiTag::Covered), (500, SemiTag::Covered), (502, SemiTag::TwicePrimePower),
    (504, SemiTag::Covered), (508, SemiTag::Covered), (512, SemiTag::TwicePrimePower), (514, SemiTag::TwicePrimePower),
    (526, SemiTag::TwicePrimePower), (528, SemiTag::Untagged), (538, SemiTag::TwicePrimePower), (540, SemiTag::Covered),
    (542, SemiTag::TwicePrimePower), (544, SemiTag::Covered), (552, SemiTag::Untagged), (554, SemiTag::TwicePrimePower),
    (560, SemiTag::Covered), (562, SemiTag::TwicePrimePower), (564, SemiTag::Untagged), (566, SemiTag::TwicePrimePower),
    (576, SemiTag::Covered), (578, SemiTag::TwicePrimePower), (586, SemiTag::TwicePrimePower), (588, SemiTag::Covered),
    (594, SemiTag::Untagged), (600, SemiTag::Covered), (612, SemiTag::Covered), (614, SemiTag::TwicePrimePower),
    (620, SemiTag::Covered), (622, SemiTag::TwicePrimePower), (624, SemiTag::Untagged), (626, SemiTag::TwicePrimePower),
    (634, SemiTag::TwicePrimePower), (640, SemiTag::Covered), (642, SemiTag::Untagged), (648, SemiTag::Covered),
    (654, SemiTag::Untagged), (660, SemiTag::Untagged), (662, SemiTag::TwicePrimePower), (666, SemiTag::Untagged),
    (672, SemiTag::Covered), (674, SemiTag::TwicePrimePower), (680, SemiTag::Covered), (686, SemiTag::TwicePrimePower),
    (694, SemiTag::TwicePrimePower), (698, SemiTag::TwicePrimePower), (700, SemiTag::Covered), (702, SemiTag::Untagged),
    (706, SemiTag::TwicePrimePower), (718, SemiTag::TwicePrimePower), (720, SemiTag::Covered), (722, SemiTag::TwicePrimePower),
    (726, SemiTag::Untagged), (734, SemiTag::TwicePrimePower), (744, SemiTag::Covered), (746, SemiTag::TwicePrimePower),
    (750, SemiTag::Covered), (756, SemiTag::Covered), (758, SemiTag::TwicePrimePower), (766, SemiTag::TwicePrimePower),
    (768, SemiTag::Covered), (778, SemiTag::TwicePrimePower), (780, SemiTag::Untagged), (784, SemiTag::Covered),
    (792, SemiTag::Untagged), (794, SemiTag::TwicePrimePower), (800, SemiTag::Covered), (802, SemiTag::TwicePrimePower),
    (810, SemiTag::Covered), (816, SemiTag::Covered), (818, SemiTag::TwicePrimePower), (828, SemiTag::Untagged),
    (838, SemiTag::TwicePrimePower), (840, SemiTag::Covered), (842, SemiTag::TwicePrimePower), (852, SemiTag::Untagged),
    (858, SemiTag::Untagged), (862, SemiTag::TwicePrimePower), (864, SemiTag::Covered), (866, SemiTag::TwicePrimePower),
    (868, SemiTag::Covered), (876, SemiTag::Untagged), (878, SemiTag::TwicePrimePower), (886, SemiTag::TwicePrimePower),
    (888, SemiTag::Untagged), (896, SemiTag::Covered), (898, SemiTag::TwicePrimePower), (900, SemiTag::Covered),
    (914, SemiTag::TwicePrimePower), (922, SemiTag::TwicePrimePower), (924, SemiTag::Untagged), (926, SemiTag::TwicePrimePower),
    (934, SemiTag::TwicePrimePower), (936, SemiTag::Untagged), (952, SemiTag::Covered), (958, SemiTag::TwicePrimePower),
    (960, SemiTag::Covered), (972, SemiTag::Covered), (974, SemiTag::TwicePrimePower), (980, SemiTag::Covered),
    (982, SemiTag::TwicePrimePower), (990, SemiTag::Untagged), (992, SemiTag::Covered), (998, SemiTag::TwicePrimePower),
    (1000, SemiTag::Covered), (1006, SemiTag::TwicePrimePower), (1008, SemiTag::Covered), (1014, SemiTag::Untagged),
    (1016, SemiTag::Covered), (1018, SemiTag::TwicePrimePower), (1020, SemiTag::Covered), (1024, SemiTag::TwicePrimePower),
    (1028, SemiTag::Untagged), (1042, SemiTag::TwicePrimePower), (1046, SemiTag::TwicePrimePower), (1056, SemiTag::Untagged),
    (1058, SemiTag::TwicePrimePower), (1080, SemiTag::Covered), (1082, SemiTag::TwicePrimePower), (1088, SemiTag::Covered),
    (1092, SemiTag::Untagged), (1094, SemiTag::TwicePrimePower), (1104, SemiTag::Untagged), (1110, SemiTag::Untagged),
    (1114, SemiTag::TwicePrimePower), (1116, SemiTag::Covered), (1120, SemiTag::Covered), (1126, SemiTag::TwicePrimePower),
    (1128, SemiTag::Untagged), (1138, SemiTag::TwicePrimePower), (1142, SemiTag::TwicePrimePower), (1152, SemiTag::Covered),
    (1154, SemiTag::TwicePrimePower), (1156, SemiTag::Covered), (1164, SemiTag::Untagged), (1170, SemiTag::Untagged),
    (1174, SemiTag::TwicePrimePower), (1176, SemiTag::Covered), (1186, SemiTag::TwicePrimePower), (1188, SemiTag::Untagged),
    (1198, SemiTag::TwicePrimePower), (1200, SemiTag::Covered), (1202, SemiTag::TwicePrimePower), (1214, SemiTag::TwicePrimePower),
    (1224, SemiTag::Covered), (1226, SemiTag::TwicePrimePower), (1234, SemiTag::TwicePrimePower), (1238, SemiTag::TwicePrimePower),
    (1240, SemiTag::Covered), (1248, SemiTag::Untagged), (1250, SemiTag::TwicePrimePower), (1260, SemiTag::Covered),
    (1262, SemiTag::TwicePrimePower), (1280, SemiTag::Covered), (1282, SemiTag::TwicePrimePower), (1284, SemiTag::Untagged),
    (1286, SemiTag::TwicePrimePower), (1294, SemiTag::TwicePrimePower), (1296, SemiTag::Covered), (1306, SemiTag::TwicePrimePower),
    (1308, SemiTag::Untagged), (1318, SemiTag::TwicePrimePower), (1320, SemiTag::Untagged), (1322, SemiTag::TwicePrimePower),
    (1332, SemiTag::Untagged), (1344, SemiTag::Covered), (1346, SemiTag::TwicePrimePower), (1350, SemiTag::Covered),
    (1354, SemiTag::TwicePrimePower), (1360, SemiTag::Covered), (1366, SemiTag::TwicePrimePower), (1372, SemiTag::Covered),
    (1380, SemiTag::Untagged), (1382, SemiTag::TwicePrimePower), (1400, SemiTag::Covered), (1402, SemiTag::TwicePrimePower),
    (1404, SemiTag::Untagged), (1418, SemiTag::TwicePrimePower), (1428, SemiTag::Covered), (1438, SemiTag::TwicePrimePower),
    (1440, SemiTag::Covered), (1452, SemiTag::Untagged), (1454, SemiTag::TwicePrimePower), (1458, SemiTag::TwicePrimePower),
    (1466, SemiTag::TwicePrimePower), (1478, SemiTag::TwicePrimePower), (1486, SemiTag::TwicePrimePower), (1488, SemiTag::Covered),
    (1500, SemiTag::Covered), (1502, SemiTag::TwicePrimePower), (1512, SemiTag::Covered), (1514, SemiTag::TwicePrimePower),
    (1522, SemiTag::TwicePrimePower), (1524, SemiTag::Covered), (1536, SemiTag::Covered), (1538, SemiTag::TwicePrimePower),
    (1546, SemiTag::TwicePrimePower), (1560, SemiTag::Untagged), (1568, SemiTag::Covered), (1574, SemiTag::TwicePrimePower),
    (1584, SemiTag::Untagged), (1594, SemiTag::TwicePrimePower), (1600, SemiTag::Covered), (1618, SemiTag::TwicePrimePower),
    (1620, SemiTag::Covered), (1622, SemiTag::TwicePrimePower), (1632, SemiTag::Covered), (1642, SemiTag::TwicePrimePower),
    (1646, SemiTag::TwicePrimePower), (1650, SemiTag::Untagged), (1654, SemiTag::TwicePrimePower), (1656, SemiTag::Untagged),
    (1658, SemiTag::TwicePrimePower), (1678, SemiTag::TwicePrimePower), (1680, SemiTag::Covered), (1682, SemiTag::TwicePrimePower),
    (1692, SemiTag::Untagged), (1700, SemiTag::Covered), (1704, SemiTag::Untagged), (1706, SemiTag::TwicePrimePower),
    (1714, SemiTag::TwicePrimePower), (1716, SemiTag::Untagged), (1718, SemiTag::TwicePrimePower), (1726, SemiTag::TwicePrimePower),
    (1728, SemiTag::Covered), (1736, SemiTag::Covered), (1752, SemiTag::Untagged), (1754, SemiTag::TwicePrimePower),
    (1762, SemiTag::TwicePrimePower), (1764, SemiTag::Covered), (1766, SemiTag::TwicePrimePower), (1774, SemiTag::TwicePrimePower),
    (1776, SemiTag::Untagged), (1782, SemiTag::Untagged), (1792, SemiTag::Covered), (1800, SemiTag::Covered),
    (1814, SemiTag::TwicePrimePower), (1822, SemiTag::TwicePrimePower), (1836, SemiTag::Covered), (1838, SemiTag::TwicePrimePower),
    (1848, SemiTag::Untagged), (1858, SemiTag::TwicePrimePower), (1860, SemiTag::Covered), (1872, SemiTag::Untagged),
    (1874, SemiTag::TwicePrimePower), (1882, SemiTag::TwicePrimePower), (1894, SemiTag::TwicePrimePower), (1904, SemiTag::Covered),
    (1906, SemiTag::TwicePrimePower), (1920, SemiTag::Covered), (1922, SemiTag::TwicePrimePower), (1926, SemiTag::Untagged),
    (1932, SemiTag::Untagged), (1934, SemiTag::TwicePrimePower), (1942, SemiTag::TwicePrimePower), (1944, SemiTag::Covered),
    (1950, SemiTag::Untagged), (1954, SemiTag::TwicePrimePower), (1960, SemiTag::Covered), (1962, SemiTag::Untagged),
    (1966, SemiTag::TwicePrimePower), (1980, SemiTag::Untagged), (1982, SemiTag::TwicePrimePower), (1984, SemiTag::Covered),
    (1994, SemiTag::TwicePrimePower), (1998, SemiTag::Untagged), (2000, SemiTag::Covered), (2016, SemiTag::Covered),
    (2018, SemiTag::TwicePrimePower), (2026, SemiTag::TwicePrimePower), (2028, SemiTag::Untagged), (2032, SemiTag::Covered),
    (2038, SemiTag::TwicePrimePower), (2040, SemiTag::Covered), (2042, SemiTag::TwicePrimePower), (2048, SemiTag::TwicePrimePower),
    (2056, SemiTag::Untagged), (2062, SemiTag::TwicePrimePower), (2066, SemiTag::TwicePrimePower), (2078, SemiTag::TwicePrimePower),
    (2098, SemiTag::TwicePrimePower), (2100, SemiTag::Covered), (2102, SemiTag::TwicePrimePower), (2106, SemiTag::Untagged),
    (2108, SemiTag::Covered), (2112, SemiTag::Untagged), (2122, SemiTag::TwicePrimePower), (2126, SemiTag::TwicePrimePower),
    (2138, SemiTag::TwicePrimePower), (2160, SemiTag::Covered), (2174, SemiTag::TwicePrimePower), (2176, SemiTag::Covered),
    (2178, SemiTag::Untagged), (2182, SemiTag::TwicePrimePower), (2184, SemiTag::Untagged), (2186, SemiTag::TwicePrimePower),
    (2194, SemiTag::TwicePrimePower), (2206, SemiTag::TwicePrimePower), (2208, SemiTag::Untagged), (2218, SemiTag::TwicePrimePower),
    (2220, SemiTag::Untagged), (2232, SemiTag::Covered), (2234, SemiTag::TwicePrimePower), (2240, SemiTag::Covered),
    (2244, SemiTag::Untagged), (2246, SemiTag::TwicePrimePower), (2250, SemiTag::Covered), (2256, SemiTag::Untagged),
    (2258, SemiTag::TwicePrimePower), (2268, SemiTag::Covered), (2292, SemiTag::Untagged), (2302, SemiTag::TwicePrimePower),
    (2304, SemiTag::Covered), (2306, SemiTag::TwicePrimePower), (2312, SemiTag::Covered), (2316, SemiTag::Untagged),
    (2326, SemiTag::TwicePrimePower), (2328, SemiTag::Untagged), (2340, SemiTag::Untagged), (2342, SemiTag::TwicePrimePower),
    (2352, SemiTag::Covered), (2362, SemiTag::TwicePrimePower), (2374, SemiTag::TwicePrimePower), (2376, SemiTag::Untagged),
    (2380, SemiTag::Covered), (2386, SemiTag::TwicePrimePower), (2400, SemiTag::Covered), (2402, SemiTag::TwicePrimePower),
    (2426, SemiTag::TwicePrimePower), (2430, SemiTag::Covered), (2434, SemiTag::TwicePrimePower), (2442, SemiTag::Untagged),
    (2446, SemiTag::TwicePrimePower), (2448, SemiTag::Covered), (2458, SemiTag::TwicePrimePower), (2462, SemiTag::TwicePrimePower),
    (2474, SemiTag::TwicePrimePower), (2480, SemiTag::Covered), (2484, SemiTag::Untagged), (2496, SemiTag::Untagged),
    (2498, SemiTag::TwicePrimePower), (2500, SemiTag::Covered),
];

/// Minimal sizes over F_17 for k = 1..=8.
pub const SIZES_MOD_17: &[u64] = &[
    3, 17, 9, 9, 8, 4, 9, 8,
];

/// Minimal sizes over F_31 for k = 1..=15.
pub const SIZES_MOD_31: &[u64] = &[
    3, 31, 15, 16, 8, 15, 15, 4, 16, 16, 16, 5, 5, 8, 15,
];

/// Minimal sizes over F_127 for k = 1..=63.
pub const SIZES_MOD_127: &[u64] = &[
    3, 127, 64, 64, 63, 63, 32, 63, 16, 64, 63, 63, 9, 32, 63, 4,
    21, 64, 63, 21, 64, 63, 63, 7, 63, 63, 64, 21, 32, 32, 63, 63,
    21, 63, 32, 7, 64, 64, 63, 9, 21, 8, 64, 64, 32, 64, 64, 8,
    64, 16, 64, 64, 9, 64, 63, 21, 63, 32, 32, 16, 7, 63, 64,
];

/// Primes below 60000 none of whose minimal sizes is 2 mod 4.
pub const CONJECTURE_PRIMES: &[u64] = &[3, 5, 7, 17, 31, 127, 257, 8191];
