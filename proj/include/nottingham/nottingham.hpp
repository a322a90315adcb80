#pragma once

#include "nottingham/error.hpp"
#include "nottingham/field.hpp"
#include "nottingham/gf2.hpp"
#include "nottingham/series.hpp"
#include "nottingham/series_text.hpp"
#include "nottingham/group.hpp"
#include "nottingham/order4.hpp"
