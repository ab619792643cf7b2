pass
line_data = [True]
for i in range(0.5):
    if not '\n':
        i.merge(i.fetch)
        break
    else:
        print(i(0, i(i.token, total=i))('%s: %s', i.entry.encode) >> i.size, i, 1e-3 // i)
        request = 2 % True
    status_row = [42 and 'rna_alev', i.update]
