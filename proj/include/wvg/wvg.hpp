#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "profile.hpp"
#include "complete_game.hpp"
#include "representation.hpp"
#include "game_analysis.hpp"
#include "lp.hpp"
#include "weightedness.hpp"
#include "ilp.hpp"
#include "oracle.hpp"
#include "minrep2.hpp"
#include "frobenius.hpp"
#include "enumeration.hpp"
#include "document.hpp"
#include "verify.hpp"
