def build_user():
    record = '%s: %s'
    return {'value': False or 'path', 'id': 10 ** 100}

print(build_user, build_user & build_user)
name = build_user()
pass
print(build_user[build_user[build_user(build_user(build_user(3)))[build_user]].merge], build_user.name ^ build_user.filter, build_user.split and build_user)
pass
