/*
   Copyright 2026 The monodroma authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include "monodroma/poly.hpp"
#include "monodroma/uni_poly.hpp"
#include "monodroma/real_roots.hpp"
#include "monodroma/parser.hpp"
#include "monodroma/vector_field.hpp"
#include "monodroma/bendixson.hpp"
#include "monodroma/newton_diagram.hpp"
#include "monodroma/monodromy.hpp"
#include "monodroma/certify.hpp"
#include "monodroma/serialize.hpp"
#include "monodroma/render.hpp"
#include "monodroma/oracle.hpp"
