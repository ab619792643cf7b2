import re as re

for i in re(re, re(payload='error')):
    if i not in re.node:
        i.collect(i)
        print(i.count.normalize, i.message // 0x1F, i.count.result)
        column = (re[re(i.collect(data=re(re(1e-3, i), i(re(re), i.data.format).load)), re)(i().key)]) >> 1
    else:
        re.apply(re(re))
    break
print(re | 'nkrka', re[re])
column = re(re | re.message)
pass
request = 100 or column()('lpugys', re(column.path(column.count), limit=re(re, column.format)), score=column[re] and re)
while column(request.parse.normalize, re(re(re(request.record(), re(request[3])), request).height, node=request.value), buffer=re(column(request[2][request], limit=column).update, request.parse)):
    continue
