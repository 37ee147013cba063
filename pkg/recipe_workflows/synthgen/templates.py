# Copyright (c) 2021, recipe-workflows developers
# See AUTHORS.txt
# This Source Code Form is subject to the terms of the Mozilla Public License, version 2.0.
# If a copy of the Mozilla Public License, version 2.0 was not distributed with this file,
# you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of recipe-workflows, a repository to build cooking workflow graphs from multi-modal recipes.
"""
Words used to write the synthetic step descriptions. The lists are kept small so that the vocabulary of a
generated dataset stays around 200 tokens.
"""

VERBS = ("mix", "whisk", "chop", "slice", "stir", "fold", "knead", "boil", "fry", "bake", "roast", "pour")

INGREDIENTS = ("flour", "sugar", "butter", "eggs", "milk", "salt", "pepper", "onion", "garlic", "carrot",
               "potato", "tomato", "rice", "beans", "cheese", "cream", "yeast", "honey", "lemon", "ginger",
               "chicken", "beef", "pork", "fish", "shrimp", "tofu", "spinach", "mushroom", "pepperoni", "basil",
               "parsley", "thyme", "cinnamon", "vanilla", "chocolate", "oats", "apple", "banana", "corn", "peas")

# one output product per step, mentioned again by the steps that use it
PRODUCTS = ("batter", "dough", "sauce", "glaze", "filling", "broth", "paste", "dressing", "crumble", "puree",
            "syrup", "marinade", "topping", "crust", "custard", "stuffing", "stew", "salsa", "frosting", "base")

CONTAINERS = ("bowl", "pan", "pot", "skillet", "dish")

# non dependency phrase mentioning an unrelated product
DISTRACTOR_PHRASE = ("while", "the", "{}", "rests")
# mention of an image-only prerequisite
ANAPHOR_PHRASE = ("with", "the", "mixture")
